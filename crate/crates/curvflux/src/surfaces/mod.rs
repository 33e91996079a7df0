//! Hypersurface charts (placeholder while the algebraic half is built).
