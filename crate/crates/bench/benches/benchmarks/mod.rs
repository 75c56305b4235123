pub mod bases;
pub mod graphs;
pub mod groups;
