pub mod arith;
pub mod cone;
pub mod free;
pub mod io;
pub mod presentation;
pub mod reductions;
pub mod schottky;
pub mod search;
pub mod validate;
