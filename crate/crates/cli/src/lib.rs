//! Batch front end: job files in, reports out.

pub mod job;
pub mod run;

pub use job::{parse_job, serialize_job, JobError, JobSpec};
pub use run::{run_job, Record, Report, RunError};
