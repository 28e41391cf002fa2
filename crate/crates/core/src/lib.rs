pub mod angular;
pub mod error;
pub mod extensions;
pub mod oracle;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
