use std::path::Path;

use projew_core::exactmath::{
    parse_rational, ArithError, BigRational, Point, RatFunc, Ring, UniPoly, Variables,
};
use projew_core::exprparse::{parse_expr_in, StructureDoc};
use projew_core::geometry::{ChartConnection, TensorField};
use projew_core::obstruction::{
    flat_verdict, generic_verdict, p_polynomials, q_polynomials, q_resultants, special_verdict,
    ResultantTriple,
};
use projew_core::pipeline::{
    generic_coeffs, invariant_bundle, pew_residual, special_branch, Branch, GenericCoeffs,
    InvariantBundle, PipelineError,
};
use projew_core::Error;

use crate::report::{FlatSection, GenericSection, Invariants, Polys, Report, Residual, SpecialSection};

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_POLE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

pub struct Outcome {
    pub report: Report,
    pub exit: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let e = e.into();
        let code = match &e {
            Error::Arith(ArithError::PoleAtPoint { .. })
            | Error::Pipeline(PipelineError::Arith(ArithError::PoleAtPoint { .. })) => EXIT_POLE,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Loaded {
    doc: StructureDoc,
    vars: Variables,
    conn: ChartConnection,
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    let doc = StructureDoc::from_json(&text)?;
    let vars = doc.vars()?;
    let conn = doc.to_connection()?;
    Ok(Loaded { doc, vars, conn })
}

fn parse_point(at: Option<&[String]>) -> Result<Option<Point>, Failure> {
    let Some(at) = at else { return Ok(None) };
    let coord = |s: &String| {
        parse_rational(s).ok_or_else(|| Failure::input(format!("invalid point coordinate `{s}`")))
    };
    Ok(Some((coord(&at[0])?, coord(&at[1])?)))
}

fn base_report(command: &'static str, loaded: &Loaded, point: Option<&Point>) -> Report {
    let names = loaded.vars.names();
    Report {
        command,
        name: loaded.doc.name.clone(),
        variables: [names[0].to_string(), names[1].to_string()],
        point: point.map(|(x, y)| [x.to_string(), y.to_string()]),
        ..Report::default()
    }
}

/// Renders values either symbolically or at a point.
struct Show<'a> {
    vars: &'a Variables,
    point: Option<&'a Point>,
}

impl Show<'_> {
    fn rf(&self, f: &RatFunc) -> Result<String, Failure> {
        match self.point {
            Some(p) => Ok(f.eval(p)?.to_string()),
            None => Ok(f.to_string_with(self.vars)),
        }
    }

    fn pair(&self, t: &TensorField) -> Result<[String; 2], Failure> {
        let [a, b] = t.pair();
        Ok([self.rf(&a)?, self.rf(&b)?])
    }
}

fn invariants_section(b: &InvariantBundle, show: &Show) -> Result<Invariants, Failure> {
    Ok(Invariants {
        rho: show.rf(&b.rho)?,
        phi: show.rf(&b.phi)?,
        ell: show.rf(&b.ell)?,
        y: show.pair(&b.y_upper)?,
        w: show.pair(&b.w_upper)?,
    })
}

pub fn invariants(path: &Path, at: Option<&[String]>) -> Result<Outcome, Failure> {
    let loaded = load(path)?;
    let point = parse_point(at)?;
    let bundle = invariant_bundle(&loaded.conn)?;
    let show = Show {
        vars: &loaded.vars,
        point: point.as_ref(),
    };
    let mut report = base_report("invariants", &loaded, point.as_ref());
    report.branch = Some(bundle.branch().as_str());
    report.invariants = Some(invariants_section(&bundle, &show)?);
    Ok(Outcome { report, exit: 0 })
}

fn check_budget(label: &str, f: &RatFunc, max_terms: usize) -> Result<(), Failure> {
    let n = f.numer().num_terms() + f.denom().num_terms();
    if n > max_terms {
        return Err(Failure {
            code: EXIT_BUDGET,
            message: format!("{label} has {n} terms, over the budget of {max_terms} (--max-terms)"),
        });
    }
    Ok(())
}

fn descending<C: Ring>(
    p: &UniPoly<C>,
    mut f: impl FnMut(&C) -> String,
) -> Vec<String> {
    p.descending().iter().map(&mut f).collect()
}

fn rho_locus_note(b: &InvariantBundle, vars: &Variables) -> Option<String> {
    let num = b.rho.numer();
    if num.is_constant() {
        return None;
    }
    Some(format!(
        "the generic formulas hold away from rho = 0, that is away from the zero set of {}",
        num.to_string_with(vars)
    ))
}

pub fn obstruction(
    path: &Path,
    at: Option<&[String]>,
    symbolic: bool,
    max_terms: usize,
) -> Result<Outcome, Failure> {
    let loaded = load(path)?;
    let point = parse_point(at)?;
    let vars = &loaded.vars;
    let bundle = invariant_bundle(&loaded.conn)?;
    let branch = bundle.branch();
    let mut report = base_report("obstruction", &loaded, point.as_ref());
    report.branch = Some(branch.as_str());
    report.invariants = Some(invariants_section(
        &bundle,
        &Show {
            vars,
            point: point.as_ref(),
        },
    )?);

    match branch {
        Branch::Flat => {
            report.flat = Some(FlatSection {
                obstruction: "0".into(),
            });
            report.verdict = Some(flat_verdict().message);
        }
        Branch::Special => {
            let s = special_branch(&bundle)?;
            if symbolic {
                for (label, f) in [("f", &s.f), ("h", &s.h), ("k", &s.k), ("m", &s.m), ("obstruction", &s.obstruction)] {
                    check_budget(label, f, max_terms)?;
                }
            }
            let sym = |f: &RatFunc| f.to_string_with(vars);
            report.special = Some(SpecialSection {
                f: sym(&s.f),
                h: sym(&s.h),
                k: sym(&s.k),
                m: sym(&s.m),
                quartic: descending(&s.quartic(), sym),
                quadratic: descending(&s.quadratic(), sym),
                obstruction: sym(&s.obstruction),
                obstruction_at_point: match &point {
                    Some(p) => Some(s.obstruction.eval(p)?.to_string()),
                    None => None,
                },
            });
            report.verdict = Some(special_verdict(&s).message);
        }
        Branch::Generic => {
            let coeffs = generic_coeffs(&bundle)?;
            report.notes.extend(rho_locus_note(&bundle, vars));
            let sym = |f: &RatFunc| f.to_string_with(vars);
            if let Some(p) = &point {
                let rho_p = bundle.rho.eval(p)?;
                let at_p = coeffs.evaluate(p)?;
                let det = if Ring::is_zero(&rho_p) {
                    None
                } else {
                    Some(q_resultants(&at_p)?)
                };
                report.verdict = Some(match &det {
                    Some(d) => generic_verdict(d, true).message,
                    None => "no verdict: rho vanishes at the point, where the generic formulas do not apply".into(),
                });
                report.generic = Some(numeric_section(&at_p, &rho_p, det.as_ref()));
            } else if symbolic {
                eprintln!("warning: symbolic determinants over Q(x, y) can be slow and large");
                let det = q_resultants(&coeffs)?;
                for (label, f) in ["Q12", "Q23", "Q13"].iter().zip(det.to_array()) {
                    check_budget(label, f, max_terms)?;
                }
                let p = p_polynomials(&coeffs, &bundle.rho);
                let q = q_polynomials(&coeffs);
                report.generic = Some(GenericSection {
                    coefficients: map_coeffs(&coeffs, sym),
                    p: Some(polys([&p.p1, &p.p2, &p.p3], sym)),
                    q: Some(polys([&q.q1, &q.q2, &q.q3], sym)),
                    determinants: Some(map_triple(&det, sym)),
                });
                report.verdict = Some(generic_verdict(&det, false).message);
            } else {
                report.generic = Some(GenericSection {
                    coefficients: map_coeffs(&coeffs, sym),
                    p: None,
                    q: None,
                    determinants: None,
                });
                report.verdict = Some("not evaluated: pass --at X Y or --symbolic to compute the determinants".into());
            }
        }
    }
    Ok(Outcome { report, exit: 0 })
}

fn map_coeffs<C>(c: &GenericCoeffs<C>, mut f: impl FnMut(&C) -> String) -> GenericCoeffs<String> {
    GenericCoeffs::from_array(c.to_array().map(&mut f))
}

fn map_triple<C>(r: &ResultantTriple<C>, mut f: impl FnMut(&C) -> String) -> ResultantTriple<String> {
    ResultantTriple {
        q12: f(&r.q12),
        q23: f(&r.q23),
        q13: f(&r.q13),
    }
}

fn polys<C: Ring>(
    p: [&UniPoly<C>; 3],
    mut f: impl FnMut(&C) -> String,
) -> Polys {
    Polys {
        first: descending(p[0], &mut f),
        second: descending(p[1], &mut f),
        third: descending(p[2], &mut f),
    }
}

fn numeric_section(
    c: &GenericCoeffs<BigRational>,
    rho: &BigRational,
    det: Option<&ResultantTriple<BigRational>>,
) -> GenericSection {
    let s = |q: &BigRational| q.to_string();
    let p = p_polynomials(c, rho);
    let q = q_polynomials(c);
    GenericSection {
        coefficients: map_coeffs(c, s),
        p: Some(polys([&p.p1, &p.p2, &p.p3], s)),
        q: Some(polys([&q.q1, &q.q2, &q.q3], s)),
        determinants: det.map(|d| map_triple(d, s)),
    }
}

pub fn check_solution(path: &Path, alpha: &[String]) -> Result<Outcome, Failure> {
    let loaded = load(path)?;
    let parse = |src: &String| {
        parse_expr_in(src, &loaded.vars).map_err(|e| Failure::input(format!("in alpha `{src}`: {e}")))
    };
    let alpha = TensorField::covector([parse(&alpha[0])?, parse(&alpha[1])?]);
    let r = pew_residual(&loaded.conn, &alpha)?;
    let show = |i: &[usize]| r.get(i).to_string_with(&loaded.vars);
    let zero = r.is_zero();
    let mut report = base_report("check-solution", &loaded, None);
    report.residual = Some(Residual {
        s11: show(&[0, 0]),
        s12: show(&[0, 1]),
        s22: show(&[1, 1]),
        zero,
    });
    report.verdict = Some(if zero {
        "alpha solves the pEW equation for this connection".into()
    } else {
        "alpha does not solve the pEW equation for this connection".into()
    });
    Ok(Outcome {
        report,
        exit: if zero { 0 } else { 1 },
    })
}
