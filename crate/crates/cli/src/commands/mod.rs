pub mod census;
pub mod check;
pub mod factor;
pub mod graph;
