pub mod arith;
pub mod iet;
pub mod subst;
pub mod theorems;
pub mod words;
