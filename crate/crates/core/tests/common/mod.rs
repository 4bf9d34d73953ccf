mod oracles;
pub use oracles::*;
