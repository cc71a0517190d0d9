pub mod catalog;
pub mod classify;
pub mod cli;
pub mod exactla;
pub mod liecore;
pub mod obstruction;
pub mod report;
pub mod spectral;
