//! Quadrature and intrinsic calculus (placeholder).
