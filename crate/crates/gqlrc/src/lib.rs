pub mod formats;
pub mod instance;
pub mod parallel;
pub mod selftest;
