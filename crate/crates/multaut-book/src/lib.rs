//! Keeps the guide honest. Each chapter under `book/src` is attached to
//! an empty module as documentation, so every `rust` code block in the
//! book builds and runs under `cargo test --doc -p multaut-book`. The
//! modules carry no code of their own.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/finite-fields.md")]
pub mod finite_fields {}

#[doc = include_str!("../../../book/src/real-line.md")]
pub mod real_line {}

#[doc = include_str!("../../../book/src/complex-plane.md")]
pub mod complex_plane {}

#[doc = include_str!("../../../book/src/additive-bridge.md")]
pub mod additive_bridge {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
