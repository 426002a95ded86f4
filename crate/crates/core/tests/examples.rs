//! Every example runs to completion.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run().unwrap();
        }
    };
}

example!(compact_derivatives);
example!(tridiagonal);
example!(inviscid_burgers);
example!(advection_diffusion_1d);
example!(viscous_burgers);
example!(advection_diffusion_2d);
example!(convergence);
example!(galilean);
example!(equivariance);
example!(tables);
