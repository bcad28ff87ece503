pub mod analyze;
pub mod fuzz;
pub mod gen;
pub mod lemma;
