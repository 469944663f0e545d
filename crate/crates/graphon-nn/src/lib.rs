//! Graphon neural networks as generating models for graph neural networks.
//!
//! A graphon is a bounded symmetric kernel `W: [0,1]^2 -> [0,1]`. Evaluating it
//! on the regular grid `u_i = (i-1)/n` produces a deterministic weighted graph
//! `S_n`, and evaluating a graphon signal `X: [0,1] -> R` on the same grid
//! produces a graph signal `x_n`. A GNN and the graphon NN (WNN) it was sampled
//! from share one graph-agnostic parameter set, so the same filters can be run
//! at any size. This crate provides:
//!
//! - sampling and induction between graphons/signals and graphs/signals
//!   ([`graphon`], [`signal`]),
//! - dense symmetric spectra with the sign-and-magnitude eigenvalue indexing
//!   used by the transfer bounds ([`spectral`]),
//! - graph and graphon convolutions in both polynomial-in-shift and spectral
//!   form, including the band-limited ramp family ([`filters`]),
//! - the layered GNN/WNN maps and their induced-output comparison ([`gnn`]),
//! - evaluation of the size-transfer bounds from measured spectral constants,
//!   plus empirical rate fitting ([`transferability`]),
//! - the consensus training experiment: L1 loss, analytic backprop through
//!   polynomial graph convolutions, ADAM ([`training`]),
//! - a small CLI and config layer for reproducible experiment runs ([`cli`]).
//!
//! The `examples/` directory has one runnable program per capability; start
//! with `sampling_and_induction` and `wnn_gnn_commutation`.

pub mod cli;
pub mod config;
pub mod error;
pub mod filters;
pub mod gnn;
pub mod graphon;
pub mod quad;
pub mod report;
pub mod signal;
pub mod spectral;
pub mod training;
pub mod transferability;

pub use error::{Error, Result};
pub use filters::{
    filter_constants, graph_convolve, graph_convolve_spectral, graphon_convolve,
    make_banded_ramp, FilterTaps, SpectralFilter,
};
pub use gnn::{gnn_forward, induced_output, instantiate_gnn, wnn_forward, Activation, GnnParams};
pub use graphon::{
    estimate_lipschitz, graphon_l2_distance, induce_graphon, sample_graph, Graphon,
    Normalization, ShiftOperator,
};
pub use signal::{induce_signal, l2_distance, sample_signal, GraphSignal, GraphonSignal, StepSignal};
pub use spectral::{
    band_constants, decompose_graph, decompose_graphon, eigenvalue_perturbation_check,
    BandConstants, SpectralDecomposition,
};
pub use transferability::{
    theorem1_bound, theorem2_bound, theorem4_bound, transfer_sweep, BoundOptions, BoundReport,
    RateFit,
};
