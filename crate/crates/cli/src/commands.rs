// Copyright 2026 The spacert Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

use spacert_core::bipartite::{self, BipartiteOperator};
use spacert_core::choi::{self, MatrixMap};
use spacert_core::eigen;
use spacert_core::hakye::{self, CounterexampleVerdict};
use spacert_core::spa;

/// A finished evaluation: the report body and the process exit code.
pub struct Outcome {
    pub body: Value,
    pub exit_code: u8,
}

impl Outcome {
    fn ok(body: Value) -> Self {
        Self { body, exit_code: 0 }
    }
}

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CONSISTENCY: u8 = 3;

fn load<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn cmd_check(path: &Path, tol: f64) -> Result<Outcome> {
    let a: BipartiteOperator = load(path)?;
    let report = bipartite::necessary_separability_check(&a, tol)?;
    let pt_min = eigen::min_eigenvalue(a.partial_transpose().matrix())?;
    Ok(Outcome::ok(json!({
        "local_dim": a.local_dim(),
        "S": report.s,
        "T": report.t,
        "ppt": pt_min >= -tol,
        "partial_transpose_min_eigenvalue": pt_min,
        "tol": tol,
        "verdict": report.verdict,
    })))
}

pub fn cmd_twirl(
    path: &Path,
    mc_samples: Option<usize>,
    seed: u64,
    threads: usize,
    tol: f64,
) -> Result<Outcome> {
    let a: BipartiteOperator = load(path)?;
    let form = bipartite::twirl(&a)?;
    let verdict = bipartite::werner_separability(&a, tol)?;
    let mut body = json!({
        "local_dim": a.local_dim(),
        "trace": a.trace().re,
        "T": a.t_functional().re,
        "alpha": form.alpha.re,
        "beta": form.beta.re,
        "werner_verdict": verdict,
    });
    if let Some(samples) = mc_samples {
        anyhow::ensure!(samples >= 1, "--mc-samples must be at least 1");
        let closed = form.reconstruct(a.local_dim());
        let mc = bipartite::twirl_monte_carlo_threaded(&a, samples, seed, threads);
        let map = body.as_object_mut().expect("object");
        map.insert("mc_samples".into(), json!(samples));
        map.insert("seed".into(), json!(seed));
        map.insert(
            "mc_max_deviation".into(),
            json!(mc.matrix().max_abs_diff(closed.matrix())),
        );
    }
    Ok(Outcome::ok(body))
}

pub fn cmd_spa(path: &Path, allow_normalize: bool, tol: f64) -> Result<Outcome> {
    let raw: MatrixMap = load(path)?;
    let (phi, scale) = spa::normalize_unital(&raw, allow_normalize)?;
    let result = spa::spa(&phi)?;
    let certificate = spa::spa_entanglement_certificate(&phi, tol)?;
    let state = result.spa_state.matrix();
    Ok(Outcome::ok(json!({
        "n": phi.input_dim(),
        "normalization": scale,
        "t_star": result.t_star,
        "neg_norm": result.neg_norm,
        "spa_trace": state.trace().re,
        "spa_min_eigenvalue": eigen::min_eigenvalue(state)?,
        "certificate": certificate,
    })))
}

pub fn cmd_hakye(epsilon: f64) -> Result<Outcome> {
    let report = hakye::counterexample(epsilon)?;
    let exit_code = match report.verdict {
        CounterexampleVerdict::Entangled => 0,
        CounterexampleVerdict::Failed => EXIT_CONSISTENCY,
    };
    Ok(Outcome {
        body: serde_json::to_value(&report)?,
        exit_code,
    })
}

pub fn cmd_choi(path: &Path) -> Result<Outcome> {
    let phi: MatrixMap = load(path)?;
    Ok(Outcome::ok(serde_json::to_value(choi::choi(&phi))?))
}
