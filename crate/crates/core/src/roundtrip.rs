//! End-to-end checks of the reductions: solve the source exactly, build the
//! gadget, run the exact search with `t_max` equal to the decision bound,
//! compare, and try to encode and decode certificates.

use std::fmt;
use std::fmt::Write as _;

use crate::cut::CutFamily;
use crate::error::Result;
use crate::npo::{solve_3dm, solve_vertex_cover, ThreeDmInstance, VertexCoverInstance};
use crate::reductions::{
    cover_to_cut, extract_cover, extract_matching, matching_to_cut, reduce_3dm,
    reduce_vertex_cover, Decode, Reduce3dmOptions, ReducedInstance,
};
use crate::solver::{solve, SolveOptions, SolveResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Skipped,
    Done(String),
    Failed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub source: bool,
    pub gadget: SolveResult,
    /// Does the source solution, encoded as a cut, pass the verifier?
    pub encode: Step,
    /// Decoding the solver's certificate back to a source solution.
    pub decode: Step,
}

impl Report {
    pub fn gadget_decision(&self) -> Option<bool> {
        self.gadget.decision()
    }

    /// PASS when both decisions are known and equal; never PASS when the
    /// gadget search was cut short.
    pub fn verdict(&self) -> Verdict {
        match self.gadget_decision() {
            None => Verdict::Inconclusive,
            Some(g) if g == self.source => Verdict::Pass,
            Some(_) => Verdict::Fail,
        }
    }

    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "YES" } else { "NO" };
        let mut out = String::new();
        let _ = writeln!(out, "decision-source {}", yn(self.source));
        let _ = writeln!(
            out,
            "decision-gadget {}",
            self.gadget_decision().map_or("INCONCLUSIVE", yn)
        );
        let _ = writeln!(out, "verdict {}", self.verdict());
        let value = self
            .gadget
            .value
            .map_or("none".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "gadget-value {value} searched-to {}",
            self.gadget.bound
        );
        for (name, step) in [("encode", &self.encode), ("decode", &self.decode)] {
            let _ = match step {
                Step::Skipped => writeln!(out, "{name} SKIPPED"),
                Step::Done(s) => writeln!(out, "{name} OK {s}"),
                Step::Failed(s) => writeln!(out, "{name} ABSENT {s}"),
            };
        }
        out
    }
}

fn one_based(xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter()
        .map(|x| (x + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn encode_step(cut: Result<CutFamily>, red: &ReducedInstance, opts: &SolveOptions) -> Step {
    match cut.and_then(|c| c.verify(&red.graph, opts.triviality).map(|ok| (ok, c))) {
        Ok((true, c)) => Step::Done(format!("{} elements", c.len())),
        Ok((false, _)) => Step::Failed("encoded family is not a cut".into()),
        Err(e) => Step::Failed(e.to_string()),
    }
}

fn decode_step<T>(decoded: Result<Decode<T>>, show: impl Fn(&T) -> String) -> Step {
    match decoded {
        Ok(Decode::Solution(s)) => Step::Done(show(&s)),
        Ok(Decode::Absent(why)) => Step::Failed(why),
        Err(e) => Step::Failed(e.to_string()),
    }
}

pub fn roundtrip_3dm(
    inst: &ThreeDmInstance,
    m: usize,
    reduce: Reduce3dmOptions,
    opts: &SolveOptions,
) -> Result<(ReducedInstance, Report)> {
    let red = reduce_3dm(inst, m, reduce)?;
    let source = solve_3dm(inst);
    let gadget = solve(&red.graph, red.kind(), m, red.parameter, opts)?;
    let encode = match &source {
        Some(sol) => encode_step(matching_to_cut(&red, sol), &red, opts),
        None => Step::Skipped,
    };
    let decode = match &gadget.certificate {
        Some(cut) => decode_step(extract_matching(&red, cut, opts.triviality), |s| {
            format!("triples {}", one_based(s.iter().copied()))
        }),
        None => Step::Skipped,
    };
    let report = Report {
        source: source.is_some(),
        gadget,
        encode,
        decode,
    };
    Ok((red, report))
}

pub fn roundtrip_vc(
    inst: &VertexCoverInstance,
    opts: &SolveOptions,
) -> Result<(ReducedInstance, Report)> {
    let red = reduce_vertex_cover(inst, None)?;
    let source = solve_vertex_cover(inst);
    let gadget = solve(&red.graph, red.kind(), red.m, red.parameter, opts)?;
    let encode = match &source {
        Some(cover) => encode_step(cover_to_cut(&red, cover), &red, opts),
        None => Step::Skipped,
    };
    let decode = match &gadget.certificate {
        Some(cut) => decode_step(extract_cover(&red, cut, opts.triviality), |s| {
            format!("cover {}", one_based(s.iter()))
        }),
        None => Step::Skipped,
    };
    let report = Report {
        source: source.is_some(),
        gadget,
        encode,
        decode,
    };
    Ok((red, report))
}
