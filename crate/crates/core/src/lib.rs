//! Desk-scale, fully deterministic laboratory for studying clean-label
//! reward poisoning of preference-aligned image generators.
//!
//! The crate builds a closed synthetic world end to end:
//!
//! - [`synthworld`] — procedural scenes, prompts, a ground-truth concept
//!   oracle, and clean preference datasets;
//! - [`encoders`] — frozen differentiable image/text encoders mapping into a
//!   shared embedding space;
//! - [`reward`] — a pairwise preference scorer trained with the
//!   Bradley-Terry negative log-likelihood;
//! - [`collision`] — proximal-gradient feature-collision crafting with a
//!   structural-similarity stealth budget;
//! - [`poison`] — semantic and feature-level poisoned preference pairs and
//!   ratio-controlled injection;
//! - [`rlhf`] — a single-step Gaussian image policy fine-tuned by
//!   advantage-weighted policy gradient with a KL anchor;
//! - [`metrics`] — attack success rate, reward overlap, SSIM, PSNR, and a
//!   deterministic perceptual-distance probe;
//! - [`experiment`] — the reproducible end-to-end pipeline, ablation grids,
//!   synonym sweeps, and report emission.
//!
//! Every operation is a pure function of its inputs and an explicit seed;
//! full pipeline runs hash-verify their artifacts byte for byte.

pub mod collision;
pub mod container;
pub mod encoders;
pub mod error;
pub mod experiment;
pub mod linalg;
pub mod metrics;
pub mod poison;
pub mod reward;
pub mod rlhf;
pub mod seed;
pub mod synthworld;

pub use error::{Error, Result};
pub use synthworld::{Image, PreferenceTriple, Prompt, Vocabulary, World};
