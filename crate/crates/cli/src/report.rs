use serde::Serialize;

use projew_core::obstruction::ResultantTriple;
use projew_core::pipeline::GenericCoeffs;

/// Everything a command prints. Optional sections are omitted when absent,
/// in both output formats.
#[derive(Debug, Default, Serialize)]
pub struct Report {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub variables: [String; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invariants: Option<Invariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flat: Option<FlatSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generic: Option<GenericSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special: Option<SpecialSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<Residual>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// `Y` and `W` are given by their contravariant components.
#[derive(Debug, Serialize)]
pub struct Invariants {
    pub rho: String,
    pub phi: String,
    pub ell: String,
    #[serde(rename = "Y")]
    pub y: [String; 2],
    #[serde(rename = "W")]
    pub w: [String; 2],
}

#[derive(Debug, Serialize)]
pub struct FlatSection {
    pub obstruction: String,
}

/// Polynomial coefficient lists run from the highest power down to the constant.
#[derive(Debug, Serialize)]
pub struct Polys {
    #[serde(rename = "1")]
    pub first: Vec<String>,
    #[serde(rename = "2")]
    pub second: Vec<String>,
    #[serde(rename = "3")]
    pub third: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct GenericSection {
    pub coefficients: GenericCoeffs<String>,
    #[serde(rename = "P", skip_serializing_if = "Option::is_none")]
    pub p: Option<Polys>,
    #[serde(rename = "Q", skip_serializing_if = "Option::is_none")]
    pub q: Option<Polys>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinants: Option<ResultantTriple<String>>,
}

#[derive(Debug, Serialize)]
pub struct SpecialSection {
    pub f: String,
    pub h: String,
    pub k: String,
    pub m: String,
    /// `15F^4 - 3fF^2 - h`, highest power first.
    pub quartic: Vec<String>,
    /// `kF^2 + m`, highest power first.
    pub quadratic: Vec<String>,
    pub obstruction: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub obstruction_at_point: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct Residual {
    #[serde(rename = "11")]
    pub s11: String,
    #[serde(rename = "12")]
    pub s12: String,
    #[serde(rename = "22")]
    pub s22: String,
    pub zero: bool,
}

fn list(v: &[String]) -> String {
    format!("[{}]", v.join(", "))
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mut line = |text: String| {
            s.push_str(&text);
            s.push('\n');
        };
        if let Some(name) = &self.name {
            line(format!("structure: {name}"));
        }
        line(format!("variables: {}, {}", self.variables[0], self.variables[1]));
        if let Some([x, y]) = &self.point {
            line(format!("point: ({x}, {y})"));
        }
        if let Some(b) = self.branch {
            line(format!("branch: {b}"));
        }
        if let Some(inv) = &self.invariants {
            line(format!("rho = {}", inv.rho));
            line(format!("phi = {}", inv.phi));
            line(format!("ell = {}", inv.ell));
            line(format!("Y = ({}, {})", inv.y[0], inv.y[1]));
            line(format!("W = ({}, {})", inv.w[0], inv.w[1]));
        }
        if let Some(flat) = &self.flat {
            line(format!("obstruction = {}", flat.obstruction));
        }
        if let Some(g) = &self.generic {
            let names = projew_core::pipeline::COEFF_NAMES;
            for (name, value) in names.iter().zip(g.coefficients.to_array()) {
                line(format!("{name} = {value}"));
            }
            if let Some(p) = &g.p {
                line(format!("P1 = {}", list(&p.first)));
                line(format!("P2 = {}", list(&p.second)));
                line(format!("P3 = {}", list(&p.third)));
            }
            if let Some(q) = &g.q {
                line(format!("Q1 = {}", list(&q.first)));
                line(format!("Q2 = {}", list(&q.second)));
                line(format!("Q3 = {}", list(&q.third)));
            }
            if let Some(d) = &g.determinants {
                line(format!("Q12 = {}", d.q12));
                line(format!("Q23 = {}", d.q23));
                line(format!("Q13 = {}", d.q13));
            }
        }
        if let Some(sp) = &self.special {
            line(format!("f = {}", sp.f));
            line(format!("h = {}", sp.h));
            line(format!("k = {}", sp.k));
            line(format!("m = {}", sp.m));
            line(format!("quartic in F = {}", list(&sp.quartic)));
            line(format!("quadratic in F = {}", list(&sp.quadratic)));
            line(format!("obstruction = {}", sp.obstruction));
            if let Some(v) = &sp.obstruction_at_point {
                line(format!("obstruction at point = {v}"));
            }
        }
        if let Some(r) = &self.residual {
            line(format!("residual = ({}, {}, {})", r.s11, r.s12, r.s22));
        }
        if let Some(v) = &self.verdict {
            line(format!("verdict: {v}"));
        }
        for n in &self.notes {
            line(format!("note: {n}"));
        }
        s
    }
}

