//! Corpus enumeration and theorem verification over small graphs.

mod enumerate;
mod verify;

pub use enumerate::{
    canonical_form, canonical_graph, enumerate_connected, enumerate_connected_max_edges, enumerate_connected_up_to,
    MAX_CANON_N, MAX_ENUMERATION_N,
};
pub use verify::{
    emit_report, verify_theorem, FilteredRecord, GraphRecord, RecordStatus, Summary, Theorem, TimeoutRecord,
    VerificationReport, VerifyOptions, REPORT_SCHEMA,
};
