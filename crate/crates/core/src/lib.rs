pub mod arith;
pub mod cli;
pub mod formulas;
pub mod gf;
pub mod graph;
pub mod identities;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod walk;
