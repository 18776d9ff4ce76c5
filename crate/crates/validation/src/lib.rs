//! Acceptance criteria for `rfvlc` live in `tests/acceptance.rs`; run them
//! with `cargo test -p rfvlc-validation --test acceptance`.
