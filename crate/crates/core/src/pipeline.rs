//! Staged detection of a K2,3 induced minor and the translation from each
//! witness kind to an explicit five-class model.

use std::time::{Duration, Instant};

use crate::bitset::VertexSet;
use crate::broken_wheel::detect_broken_wheel;
use crate::exec::ExecMode;
use crate::graph::Graph;
use crate::long_prism::detect_long_prism;
use crate::model::{check_model, InducedMinorModel};
use crate::oracle::{find_config_exhaustive, ConfigKind};
use crate::witness::{wheel_sectors, Witness};

/// Pyramid stage. Runs exhaustively; the specialized routines for the later
/// stages all assume pyramid-freeness.
pub fn detect_pyramid(g: &Graph) -> Option<Witness> {
    find_config_exhaustive(g, ConfigKind::Pyramid)
}

/// Theta stage, likewise exhaustive.
pub fn detect_theta(g: &Graph) -> Option<Witness> {
    find_config_exhaustive(g, ConfigKind::Theta)
}

/// Wall-clock cost of one executed stage.
pub type StageTiming = (&'static str, Duration);

/// Decides whether g contains K2,3 as an induced minor. A positive answer
/// carries the first witness in stage order (pyramid, theta, long prism,
/// broken wheel) and its checked induced-minor model.
pub fn detect_k23_induced_minor(
    g: &Graph,
    mode: ExecMode,
) -> Option<(Witness, InducedMinorModel)> {
    detect_k23_induced_minor_timed(g, mode).0
}

/// Same as `detect_k23_induced_minor`, also reporting how long each executed
/// stage took.
pub fn detect_k23_induced_minor_timed(
    g: &Graph,
    mode: ExecMode,
) -> (Option<(Witness, InducedMinorModel)>, Vec<StageTiming>) {
    let mut timings = Vec::new();

    let start = Instant::now();
    let found = detect_pyramid(g);
    timings.push(("pyramid", start.elapsed()));
    if let Some(w) = found {
        let model = witness_to_model(g, &w);
        return (Some((w, model)), timings);
    }

    let start = Instant::now();
    let found = detect_theta(g);
    timings.push(("theta", start.elapsed()));
    if let Some(w) = found {
        let model = witness_to_model(g, &w);
        return (Some((w, model)), timings);
    }

    let start = Instant::now();
    let found = detect_long_prism(g, mode).expect("pyramid stage ruled out pyramids");
    timings.push(("long-prism", start.elapsed()));
    if let Some(w) = found {
        let model = witness_to_model(g, &w);
        return (Some((w, model)), timings);
    }

    let start = Instant::now();
    let found = detect_broken_wheel(g, mode);
    timings.push(("broken-wheel", start.elapsed()));
    if let Some(w) = found {
        let model = witness_to_model(g, &w);
        return (Some((w, model)), timings);
    }

    (None, timings)
}

/// Expands a witness into the five-class induced-minor model and verifies it
/// with the model checker. A rejection can only come from a bug in the
/// translation or the detectors, so it panics with full diagnostics.
pub fn witness_to_model(g: &Graph, w: &Witness) -> InducedMinorModel {
    let model = build_model(g, w);
    if let Err(e) = check_model(g, &model) {
        panic!(
            "witness translation produced an invalid model: {e}\n\
             witness: {w:?}\nmodel: {:?}",
            model.report()
        );
    }
    model
}

fn build_model(g: &Graph, w: &Witness) -> InducedMinorModel {
    let n = g.n();
    let set = |vs: &[usize]| VertexSet::from_iter(n, vs.iter().copied());
    match w {
        Witness::Theta { hubs, paths } => InducedMinorModel {
            x_u: set(&[hubs[0]]),
            x_v: set(&[hubs[1]]),
            x_a: set(&paths[0][1..paths[0].len() - 1]),
            x_b: set(&paths[1][1..paths[1].len() - 1]),
            x_c: set(&paths[2][1..paths[2].len() - 1]),
        },
        Witness::Pyramid { apex, paths, .. } => {
            // The two long paths become hub middles, the third path joins
            // its corner's class.
            let long: Vec<usize> = (0..3).filter(|&i| paths[i].len() >= 3).collect();
            let (i1, i2) = (long[0], long[1]);
            let i3 = 3 - i1 - i2;
            let (p1, p2, p3) = (&paths[i1], &paths[i2], &paths[i3]);
            InducedMinorModel {
                x_u: set(&[*apex]),
                x_v: set(&[*p1.last().unwrap(), *p2.last().unwrap()]),
                x_a: set(&p1[1..p1.len() - 1]),
                x_b: set(&p2[1..p2.len() - 1]),
                x_c: set(&p3[1..]),
            }
        }
        Witness::LongPrism {
            triangle_a,
            triangle_b,
            paths,
        } => {
            // Rotate labels so the first path is long, then contract the
            // other two paths into the triangles they leave.
            let r = (0..3)
                .find(|&i| paths[i].len() >= 3)
                .expect("a long prism has a long path");
            let a: Vec<usize> = (0..3).map(|j| triangle_a[(r + j) % 3]).collect();
            let b: Vec<usize> = (0..3).map(|j| triangle_b[(r + j) % 3]).collect();
            let (p1, p2, p3) = (&paths[r], &paths[(r + 1) % 3], &paths[(r + 2) % 3]);
            let mut x_u = set(&p2[..p2.len() - 1]);
            x_u.insert(a[0]);
            let mut x_v = set(&p3[1..]);
            x_v.insert(b[0]);
            InducedMinorModel {
                x_u,
                x_v,
                x_a: set(&p1[1..p1.len() - 1]),
                x_b: set(&[a[2]]),
                x_c: set(&[b[1]]),
            }
        }
        Witness::BrokenWheel { rim, center } => {
            let sectors = wheel_sectors(g, rim, *center);
            let m = sectors.len();
            let k = rim.len();
            let long: Vec<usize> = (0..m).filter(|&t| sectors[t].1 >= 2).collect();
            let (t1, t2) = (long[0], long[1]);
            let (a_i, b_i) = (sectors[t1].0, sectors[(t1 + 1) % m].0);
            let (c_i, d_i) = (sectors[t2].0, sectors[(t2 + 1) % m].0);
            // Rim stretch from one index to another, inclusive.
            let arc = |from: usize, to: usize| {
                let mut out = vec![rim[from]];
                let mut i = from;
                while i != to {
                    i = (i + 1) % k;
                    out.push(rim[i]);
                }
                out
            };
            let interior = |from: usize, to: usize| {
                let mut out = Vec::new();
                let mut i = (from + 1) % k;
                while i != to {
                    out.push(rim[i]);
                    i = (i + 1) % k;
                }
                out
            };
            InducedMinorModel {
                x_u: set(&arc(d_i, a_i)),
                x_v: set(&arc(b_i, c_i)),
                x_a: set(&[*center]),
                x_b: set(&interior(a_i, b_i)),
                x_c: set(&interior(c_i, d_i)),
            }
        }
    }
}
