//! Garside structures, their normal forms, and the regular languages of
//! normal forms.

pub mod artin;
pub mod coxeter;
pub mod error;
pub mod experiment;
pub mod garside;
pub mod langgraph;
pub mod normalform;
pub mod penetration;

pub use error::{Error, Result};
