//! Experiment runner (placeholder).
