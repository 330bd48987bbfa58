//! Example catalog, presentation documents, suite selection and report
//! rendering.

pub mod catalog;
mod document;
mod render;
mod suites;

pub use document::{export, import, parse_document, DocumentError};
pub use render::{render, render_json, render_text, ReportFormat};
pub use suites::{double_reports, integral_reports, run_suite, Suite};
