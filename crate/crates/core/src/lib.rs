pub mod error;
pub mod experiments;
pub mod io;
pub mod nn;
pub mod reparam;
pub mod sampler;
pub mod special;
pub mod stats;
pub mod vmf;

pub use error::{Error, Result};
pub use vmf::{HypersphericalUniform, VonMisesFisher};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/vmf.md")]
    mod vmf {}
    #[doc = include_str!("../../../book/src/sampling.md")]
    mod sampling {}
    #[doc = include_str!("../../../book/src/gradients.md")]
    mod gradients {}
    #[doc = include_str!("../../../book/src/vae.md")]
    mod vae {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
