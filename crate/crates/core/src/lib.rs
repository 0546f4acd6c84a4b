pub mod cartier;
pub mod covers;
pub mod curves;
pub mod error;
pub mod ff;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod search;
pub mod strata;
pub mod verify;

pub use error::{Error, Result};
