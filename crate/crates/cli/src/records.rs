//! Conversions from library values to output records.

use congruum::apsquares::{AbdSolution, CongruumWitness, FourthPowerHit, Progression};
use congruum::constructions::{PythQuadruple, QuadParams, QuadSumWitness, Triangle};
use congruum::descent::{CongruumCandidate, FourSplit, SquareArea};
use congruum::triples::{PythTriple, TripleParams};
use congruum::{Natural, VerificationReport};

use crate::output::{Kind, Record};

type N = Natural;

pub fn triple(p: &TripleParams<N>, t: &PythTriple<N>) -> Record {
    Record::new(Kind::Triple)
        .field("a", &t.a)
        .field("b", &t.b)
        .field("c", &t.c)
        .field("m", &p.m)
        .field("n", &p.n)
}

pub fn scaled_triple(p: &TripleParams<N>, t: &PythTriple<N>) -> Record {
    triple(p, t).field("k", &p.k)
}

pub fn witness(w: &CongruumWitness<N>) -> Record {
    Record::new(Kind::Congruum)
        .field("a", &w.a)
        .field("c", &w.c)
        .field("d", &w.d)
        .field("r", &w.r)
        .field("m", &w.m)
        .field("n", &w.n)
        .field("s", &w.s)
}

pub fn progression(p: &Progression<N>) -> Record {
    Record::new(Kind::Congruum)
        .field("a", &p.a)
        .field("c", &p.c)
        .field("d", &p.d)
        .field("r", &p.r)
}

pub fn abd(s: &AbdSolution<N>) -> Record {
    Record::new(Kind::Abd)
        .field("a", &s.a)
        .field("b", &s.b)
        .field("d", &s.d)
        .field("m", &s.m)
        .field("n", &s.n)
        .field("form", s.form.name())
}

pub fn quadruple(p: &QuadParams<N>, q: &PythQuadruple<N>) -> Record {
    Record::new(Kind::Quadruple)
        .field("a", &q.a)
        .field("b", &q.b)
        .field("c", &q.c)
        .field("d", &q.d)
        .field("m", &p.m)
        .field("n", &p.n)
        .field("p", &p.p)
        .field("q", &p.q)
}

pub fn heron(t: &Triangle<N>, sixteen_area_sq: &N, area: Option<&N>) -> Record {
    Record::new(Kind::Triangle)
        .field("x", &t.x)
        .field("y", &t.y)
        .field("z", &t.z)
        .field("area_sq_16", sixteen_area_sq)
        .field("area", area.map(ToString::to_string).unwrap_or_default())
}

pub fn proof3(w: &QuadSumWitness<N>, t: &Triangle<N>, area: &N) -> Record {
    Record::new(Kind::Triangle)
        .field("x", &t.x)
        .field("y", &t.y)
        .field("z", &t.z)
        .field("area", area)
        .field("semiperimeter", t.perimeter() / 2u32)
        .field("m", &w.m)
        .field("n", &w.n)
        .field("v", &w.v)
        .field("u", &w.u)
}

pub fn split(s: &FourSplit<N>) -> Record {
    Record::new(Kind::Split)
        .field("w", &s.w)
        .field("x", &s.x)
        .field("y", &s.y)
        .field("z", &s.z)
}

pub fn violation(e: &congruum::Error) -> Record {
    Record::new(Kind::Report)
        .field("status", "precondition-violation")
        .field("reason", e.code())
}

pub fn progression_brief(p: &Progression<N>) -> String {
    format!("{} {} {} {}", p.a, p.c, p.d, p.r)
}

pub fn square_area_brief(s: &SquareArea<N>) -> String {
    format!("{} {} {} {}", s.triple.a, s.triple.b, s.triple.c, s.area)
}

pub fn candidate_brief(c: &CongruumCandidate<N>) -> String {
    format!("{} {} {} {}", c.a, c.b, c.c, c.d)
}

pub fn fourth_power_brief(h: &FourthPowerHit<N>) -> String {
    format!("{} {} {} {}", h.m, h.n, h.form.name(), h.c)
}

/// Counterexamples are listed space-separated within an entry and
/// `;`-separated between entries, so CSV rows stay unquoted.
pub fn report<W>(rep: &VerificationReport<W>, brief: fn(&W) -> String) -> Record {
    let witnesses: Vec<String> = rep.counterexamples.iter().map(brief).collect();
    Record::new(Kind::Report)
        .field("target", rep.target)
        .field("bound", &rep.bound)
        .field("checked", rep.checked)
        .field("counterexamples", rep.counterexamples.len())
        .field("witnesses", witnesses.join(";"))
        .field(
            "status",
            if rep.passed() {
                "verified"
            } else {
                "falsified"
            },
        )
        .field("elapsed_ms", rep.elapsed.as_millis())
}
