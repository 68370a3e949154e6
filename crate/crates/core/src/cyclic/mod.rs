//! Placeholder while building bottom-up.
