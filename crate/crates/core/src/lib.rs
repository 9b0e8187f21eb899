pub mod catalog;
pub mod cli;
pub mod constraints;
pub mod edgelist;
mod exact;
pub mod homology;
pub mod lattice;
pub mod multigraph;
pub mod search;
pub mod surgery;
