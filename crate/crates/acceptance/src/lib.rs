//! Holds the `acceptance` test target; see `tests/acceptance.rs`. The
//! suite lives in its own package so it runs after the core crate's tests.
