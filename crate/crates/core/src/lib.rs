pub mod error;
pub mod gf;
pub mod linalg;
pub mod poly;
pub mod groebner;
pub mod variety;
pub mod indicators;
pub mod codes;
pub mod artinian;
pub mod duality;
pub mod io;
pub mod golden;
