//! Report layer (stub).
