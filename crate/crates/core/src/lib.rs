//! Exact construction of special orthogonal polynomial families with
//! symbolic parameters, their lowering, raising and shift operators, and a
//! verifier for the identities relating them.

pub mod exactalg;
pub mod families;
pub mod operators;
pub mod numcheck;
pub mod verify;
pub mod qseries;
