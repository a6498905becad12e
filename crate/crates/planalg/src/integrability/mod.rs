//! Integrability layer (stub).
