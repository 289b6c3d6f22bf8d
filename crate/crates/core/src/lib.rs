//! Turn-level conversation quality analytics for task-oriented dialog systems.
//!
//! The crate turns multi-annotator conversation transcripts into bot-quality
//! intelligence:
//!
//! - [`corpus`] — transcript data model, JSONL/TSV ingestion, per-bot statistics.
//! - [`annotation`] — per-annotator labels, gold aggregation (median IQ,
//!   majority ACQI with bot-frequency tie-breaking), agreement reports.
//! - [`features`] — pluggable utterance embeddings, 4-slot context vectors,
//!   cumulative ACQI count features, and the five feature-set variants.
//! - [`model`] — balanced L2-regularized multinomial logistic regression.
//! - [`evaluation`] — agreement/classification metrics, iterative multi-label
//!   stratified k-fold splitting, nested cross-validation, bootstrap CIs.
//! - [`analysis`] — descriptive links between ACQIs and IQ changes.
//! - [`actions`] — ACQI-to-action taxonomy and candidate-action simulator.
//! - [`synth`] — deterministic synthetic corpora and annotators for testing.
//! - [`report`] — JSON report shapes and aligned plain-text tables.
//!
//! Everything stochastic takes an explicit seed and derives per-task RNG
//! streams from it, so results are independent of worker scheduling.

pub mod actions;
pub mod analysis;
pub mod annotation;
pub mod corpus;
pub mod evaluation;
pub mod features;
pub mod model;
pub mod report;
pub mod rng;
pub mod synth;

use thiserror::Error;

/// Unified error for pipeline-level callers; module APIs return their own
/// error types, which convert into this one.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Corpus(#[from] corpus::CorpusError),
    #[error(transparent)]
    Annotation(#[from] annotation::AnnotationError),
    #[error(transparent)]
    Feature(#[from] features::FeatureError),
    #[error(transparent)]
    Model(#[from] model::ModelError),
    #[error(transparent)]
    Evaluation(#[from] evaluation::EvalError),
    #[error(transparent)]
    Analysis(#[from] analysis::AnalysisError),
    #[error(transparent)]
    Action(#[from] actions::ActionError),
    #[error(transparent)]
    Synth(#[from] synth::SynthError),
}

impl Error {
    /// Stable machine-parseable category for CLI exit reporting.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Corpus(e) => e.category(),
            Error::Annotation(_) => "validation",
            Error::Feature(_) => "validation",
            Error::Model(_) => "compute",
            Error::Evaluation(_) => "compute",
            Error::Analysis(_) => "validation",
            Error::Action(_) => "validation",
            Error::Synth(_) => "config",
        }
    }
}
