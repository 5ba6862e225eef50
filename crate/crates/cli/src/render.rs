//! Text tables and CSV rows.

use std::fmt::Write as _;

use infsup::{BoundReport64, RefutationReport, Tagged, Verdict};

/// Compact human-readable number.
pub fn num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else if x == 0.0 || (1e-3..1e6).contains(&x.abs()) {
        format!("{x:.10}")
    } else {
        format!("{x:.9e}")
    }
}

/// 17 significant digits, enough to round-trip any `f64`.
pub fn exact(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        num(x)
    }
}

/// `x` rounded to three significant digits.
pub fn sig3(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return num(x);
    }
    let decimals = (2 - x.abs().log10().floor() as i32).max(0) as usize;
    format!("{x:.decimals$}")
}

fn provenance(t: &Tagged<f64>) -> String {
    t.provenance.to_string()
}

pub fn bounds_table(r: &BoundReport64, extras: &[(String, f64, &str)]) -> String {
    let mut rows: Vec<(String, String, String)> = Vec::new();
    let mut tagged = |name: &str, t: &Tagged<f64>| rows.push((name.into(), num(t.value), provenance(t)));
    tagged("omega (Horgan-Payne angle)", &r.omega_hp);
    tagged("m (sup inf P)", &r.m);
    tagged("M (inf sup P)", &r.big_m);
    tagged("alpha*", &r.alpha_star);
    tagged("rho_max (normalized)", &r.rho_max);
    tagged("R_min (normalized)", &r.r_min);
    tagged("tau", &r.tau);
    tagged("psi", &r.psi);
    tagged("M_tau", &r.m_tau);
    tagged("beta lower", &r.beta_lower_proven);
    tagged("beta lower, Horgan-Payne", &r.beta_lower_hp_claimed);
    tagged("beta lower, radii ratio", &r.beta_lower_rrho);
    if let Some(u) = &r.beta_upper {
        tagged("beta upper (cut)", u);
    }
    tagged("C upper", &r.c_upper_proven);
    tagged("Gamma upper", &r.gamma_upper_proven);
    tagged("K upper", &r.k_upper_smooth_only);
    if r.alpha_at_upper_limit {
        rows.push(("alpha* at upper limit".into(), "yes".into(), String::new()));
    }
    if let Some(d) = r.beta_upper_direction {
        rows.push(("cut direction".into(), num(d), "GEOMETRY".into()));
    }
    rows.push(("normalization scale".into(), num(r.normalization_scale), "GEOMETRY".into()));
    for (name, v, tag) in extras {
        rows.push((name.clone(), num(*v), tag.to_string()));
    }
    let reference = &r.reference;
    if let Some(g) = reference.friedrichs {
        rows.push(("Gamma exact".into(), num(g), "REFERENCE".into()));
    }
    if let Some(b) = reference.beta {
        rows.push(("beta exact".into(), num(b), "REFERENCE".into()));
    }
    if let Some(c) = reference.babuska_aziz_lower {
        rows.push(("C lower (exact reference)".into(), num(c), "REFERENCE".into()));
    }
    table(&rows)
}

pub fn refutation_table(r: &RefutationReport<f64>, omega: f64) -> String {
    let rows = vec![
        ("family".into(), r.family.to_string(), String::new()),
        (r.family.parameter_name().into(), num(r.parameter), String::new()),
        ("omega".into(), num(omega), "GEOMETRY".into()),
        ("claimed lower beta^2 = sin^2(omega/2)".into(), num(r.claimed_beta_sq), "CLAIMED".into()),
        ("upper beta^2 from the cut".into(), num(r.proven_upper_beta_sq), "PROVEN".into()),
        ("margin (claimed - upper)".into(), num(r.margin), String::new()),
        ("verdict".into(), r.verdict.to_string(), String::new()),
    ];
    table(&rows)
}

fn table(rows: &[(String, String, String)]) -> String {
    let w0 = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    let w1 = rows.iter().map(|r| r.1.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (a, b, c) in rows {
        let line = format!("{a:<w0$}  {b:>w1$}  {c}");
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

pub const SWEEP_HEADER: [&str; 8] = [
    "parameter",
    "omega",
    "m",
    "M",
    "beta_lower_proven",
    "beta_lower_hp_claimed",
    "beta_upper",
    "verdict",
];

/// One CSV row of a parameter sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub parameter: f64,
    pub omega: f64,
    pub m: f64,
    pub big_m: f64,
    pub beta_lower_proven: f64,
    pub beta_lower_hp_claimed: f64,
    pub beta_upper: Option<f64>,
    pub verdict: Verdict,
}

impl SweepRow {
    pub fn from_report(parameter: f64, r: &BoundReport64) -> Self {
        let upper = r.beta_upper.map(|u| u.value);
        let claimed = r.beta_lower_hp_claimed.value;
        Self {
            parameter,
            omega: r.omega_hp.value,
            m: r.m.value,
            big_m: r.big_m.value,
            beta_lower_proven: r.beta_lower_proven.value,
            beta_lower_hp_claimed: claimed,
            beta_upper: upper,
            verdict: match upper {
                Some(u) if claimed > u => Verdict::Refuted,
                _ => Verdict::NotRefuted,
            },
        }
    }

    pub fn record(&self) -> [String; 8] {
        [
            exact(self.parameter),
            exact(self.omega),
            exact(self.m),
            exact(self.big_m),
            exact(self.beta_lower_proven),
            exact(self.beta_lower_hp_claimed),
            self.beta_upper.map(exact).unwrap_or_default(),
            self.verdict.to_string(),
        ]
    }
}

pub fn csv(rows: &[SweepRow]) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(SWEEP_HEADER).expect("in-memory write");
    for r in rows {
        w.write_record(r.record()).expect("in-memory write");
    }
    w.into_inner().expect("in-memory flush")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, 2.5723e-7, 12345.678901234567] {
            let s = exact(x);
            assert_eq!(s.parse::<f64>().unwrap(), x);
            let mantissa = s.split('e').next().unwrap().replace(['.', '-'], "");
            assert_eq!(mantissa.len(), 17);
        }
        assert_eq!(exact(f64::INFINITY), "inf");
    }

    #[test]
    fn three_significant_digits() {
        assert_eq!(sig3(2.572048), "2.57");
        assert_eq!(sig3(0.0237522), "0.0238");
        assert_eq!(sig3(0.00416778), "0.00417");
        assert_eq!(sig3(123.4), "123");
    }
}
