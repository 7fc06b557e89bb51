//! CLI surface and JSON file formats for the exact Leibniz-algebra library.

pub mod app;
pub mod json;
pub mod report;
