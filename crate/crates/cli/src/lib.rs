//! Command-line driver and exporters for the G-Hilbert fan.

pub mod cli;
pub mod document;
pub mod svg;

pub use cli::{run, run_with, EXIT_INVALID_ACTION, EXIT_OK, EXIT_USAGE, EXIT_VALIDATION};
pub use document::FanDocument;
pub use svg::{export_svg, Chart, ConfigError, RenderConfig};

use ghilb_core::fan::{Fan, FanReport};

/// The fan as schema-1 JSON, in the caller's coordinates.
pub fn export_json(fan: &Fan, report: &FanReport) -> String {
    FanDocument::new(fan, report).to_json()
}
