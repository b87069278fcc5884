pub mod eta;
pub mod fit;
pub mod rank;
pub mod simulate;
pub mod verify;
