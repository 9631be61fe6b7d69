//! Command line front end for `monolab-core`: the polynomial parser, JSON
//! output, the built-in corpus and command dispatch.

pub mod cli;
pub mod corpus;
pub mod output;
pub mod parse;

pub use monolab_core as core;
