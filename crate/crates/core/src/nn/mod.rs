//! Small dense networks and the variational autoencoders built from them.

pub mod checkpoint;
pub mod layers;
pub mod tape;
pub mod tensor;
pub mod vae;

pub use layers::{mlp_forward, Activation, Adam, Dense, Mlp};
pub use tape::{Grads, Tape, Var};
pub use tensor::Tensor;
pub use vae::{log_sum_exp, warmup_beta, ElboReport, Encoding, Likelihood, PosteriorKind, StepOptions, Vae, VaeConfig};
