//! Library backing for the `hamcycle` binary. Command logic lives here
//! so integration tests and the acceptance suite can drive it in
//! process; `main.rs` only parses flags and forwards.

pub mod bench;
pub mod check;
pub mod commands;

/// Exit code contract: 0 success or HAMILTONIAN, 1 a legitimate NONE or
/// a failed verification, 2 usage or parse errors.
pub const EXIT_OK: i32 = 0;
pub const EXIT_NONE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
