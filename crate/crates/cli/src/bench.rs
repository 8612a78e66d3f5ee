//! Scaling benchmark: random instances meeting the degree bound, solved
//! and verified, with wall time per solve. Instances run sequentially so
//! the timings are not polluted by each other.

use std::time::Instant;

use hamcycle::generators::gen_random_min_degree;
use hamcycle::hamiltonian::{find_hamiltonian, verify_cycle, NoneCertificate, SolveOutcome};

#[derive(Debug, Clone)]
pub struct BenchRow {
    pub n: usize,
    pub seed: u64,
    pub edges: usize,
    pub outcome: String,
    pub verified: bool,
    pub wall_ms: f64,
}

/// Runs `seeds_per_size` seeded instances per requested size. The
/// timer covers only the solve; generation and verification sit outside
/// it.
pub fn run_bench(sizes: &[usize], seeds_per_size: usize) -> Result<Vec<BenchRow>, String> {
    if let Some(&bad) = sizes.iter().find(|&&n| n < 3) {
        return Err(format!("--sizes entries must be at least 3, got {bad}"));
    }
    if sizes.is_empty() {
        return Err("--sizes must list at least one size".into());
    }
    let mut rows = Vec::with_capacity(sizes.len() * seeds_per_size);
    for &n in sizes {
        for seed in 0..seeds_per_size as u64 {
            let g = gen_random_min_degree(n, seed).map_err(|e| e.to_string())?;
            let started = Instant::now();
            let outcome = find_hamiltonian(&g);
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let (outcome, verified) = match outcome {
                Ok(SolveOutcome::Hamiltonian(c)) => {
                    ("HAMILTONIAN".to_string(), verify_cycle(&g, c.vertices()))
                }
                Ok(SolveOutcome::None(cert)) => {
                    let name = match cert {
                        NoneCertificate::CutVertex(_) => "NONE_CUT_VERTEX",
                        NoneCertificate::BigIndependentComponent(_) => "NONE_INDEPENDENT_SET",
                        NoneCertificate::RotationExhausted(_) => "NONE_ROTATION_EXHAUSTED",
                    };
                    (name.to_string(), cert.validate(&g))
                }
                Err(e) => (format!("ERROR_{e:?}"), false),
            };
            rows.push(BenchRow {
                n,
                seed,
                edges: g.edge_count(),
                outcome,
                verified,
                wall_ms,
            });
        }
    }
    Ok(rows)
}

/// Fixed-header CSV; `wall_ms` is the only column that varies between
/// reruns of identical parameters.
pub fn render_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("n,seed,edges,outcome,wall_ms\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.3}\n",
            r.n, r.seed, r.edges, r.outcome, r.wall_ms
        ));
    }
    out
}

/// Median solve time per size, in the order sizes first appear.
pub fn medians_by_size(rows: &[BenchRow]) -> Vec<(usize, f64)> {
    let mut sizes: Vec<usize> = Vec::new();
    for r in rows {
        if !sizes.contains(&r.n) {
            sizes.push(r.n);
        }
    }
    sizes
        .into_iter()
        .map(|n| {
            let mut times: Vec<f64> = rows
                .iter()
                .filter(|r| r.n == n)
                .map(|r| r.wall_ms)
                .collect();
            times.sort_by(|a, b| a.partial_cmp(b).expect("times are finite"));
            (n, times[times.len() / 2])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes_all_hamiltonian() {
        let rows = run_bench(&[8, 12], 3).unwrap();
        assert_eq!(rows.len(), 6);
        for r in &rows {
            assert_eq!(r.outcome, "HAMILTONIAN");
            assert!(r.verified);
        }
        let csv = render_csv(&rows);
        assert!(csv.starts_with("n,seed,edges,outcome,wall_ms\n"));
        assert_eq!(csv.lines().count(), 7);
    }

    #[test]
    fn outcome_columns_deterministic() {
        let strip = |rows: &[BenchRow]| -> Vec<(usize, u64, usize, String)> {
            rows.iter()
                .map(|r| (r.n, r.seed, r.edges, r.outcome.clone()))
                .collect()
        };
        assert_eq!(
            strip(&run_bench(&[9], 4).unwrap()),
            strip(&run_bench(&[9], 4).unwrap())
        );
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(run_bench(&[2], 1).is_err());
        assert!(run_bench(&[], 1).is_err());
    }

    #[test]
    fn medians_follow_input_order() {
        let rows = run_bench(&[8, 6], 3).unwrap();
        let med = medians_by_size(&rows);
        assert_eq!(med[0].0, 8);
        assert_eq!(med[1].0, 6);
    }
}
