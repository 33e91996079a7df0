//! Flux experiments (placeholder).
