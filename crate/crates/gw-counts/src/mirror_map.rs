//! The mirror transformation of the hypergeometric table and the extraction
//! of curve counts from its second-order pole.

use std::collections::BTreeMap;

use num_traits::Zero;
use qseries::{qint, ChowElement, HbarLaurent, Q, QSeries};

use crate::{class_grade, euler_class, q_lattice, CountError, IFunctionTable, ThreefoldClass};

/// A series over the four-variable class lattice with cohomology-valued
/// Laurent coefficients, truncated by total class grade.
#[derive(Clone, Debug)]
pub struct BetaSeries {
    pub max_grade: u32,
    terms: BTreeMap<ThreefoldClass, HbarLaurent>,
}

fn add_class(x: &ThreefoldClass, y: &ThreefoldClass) -> ThreefoldClass {
    [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]]
}

fn class_of_exponent(v: &[i64]) -> ThreefoldClass {
    [v[0] as u32, v[1] as u32, v[2] as u32, v[3] as u32]
}

impl BetaSeries {
    pub fn zero(max_grade: u32) -> Self {
        Self {
            max_grade,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(max_grade: u32) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert([0, 0, 0, 0], HbarLaurent::one());
        Self { max_grade, terms }
    }

    /// A series from explicit class-coefficient pairs, dropping classes
    /// beyond the grade cap.
    pub fn from_terms(
        max_grade: u32,
        terms: impl IntoIterator<Item = (ThreefoldClass, HbarLaurent)>,
    ) -> Self {
        let mut out = Self::zero(max_grade);
        for (beta, l) in terms {
            if class_grade(&beta) <= max_grade && !l.is_zero() {
                out.insert_add(beta, &l);
            }
        }
        out
    }

    /// The table of raw hypergeometric summands as a series.
    pub fn from_table(table: &IFunctionTable) -> Self {
        let mut out = Self::zero(table.max_grade);
        for beta in table.classes() {
            if let Some(r) = table.summand(beta) {
                if !r.is_zero() {
                    out.terms.insert(*beta, r.clone());
                }
            }
        }
        out
    }

    pub fn coeff(&self, beta: &ThreefoldClass) -> HbarLaurent {
        self.terms.get(beta).cloned().unwrap_or_else(HbarLaurent::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ThreefoldClass, &HbarLaurent)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, beta: ThreefoldClass, l: &HbarLaurent) {
        let entry = self.terms.entry(beta).or_insert_with(HbarLaurent::zero);
        *entry = entry.add(l);
        if entry.is_zero() {
            self.terms.remove(&beta);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.max_grade = self.max_grade.min(other.max_grade);
        out.terms.retain(|b, _| class_grade(b) <= out.max_grade);
        for (beta, l) in &other.terms {
            if class_grade(beta) <= out.max_grade {
                out.insert_add(*beta, l);
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let g = self.max_grade.min(other.max_grade);
        let mut out = Self::zero(g);
        for (ba, la) in &self.terms {
            for (bb, lb) in &other.terms {
                let beta = add_class(ba, bb);
                if class_grade(&beta) > g {
                    continue;
                }
                let l = la.mul(lb);
                if !l.is_zero() {
                    out.insert_add(beta, &l);
                }
            }
        }
        out
    }

    pub fn scale_laurent(&self, l: &HbarLaurent) -> Self {
        let mut out = Self::zero(self.max_grade);
        for (beta, la) in &self.terms {
            let p = la.mul(l);
            if !p.is_zero() {
                out.terms.insert(*beta, p);
            }
        }
        out
    }

    /// Exponential of a series without constant term.
    pub fn exp(&self) -> Self {
        let mut out = Self::one(self.max_grade);
        let mut term = Self::one(self.max_grade);
        let mut factorial = qint(1);
        for k in 1..=self.max_grade {
            term = term.mul(self);
            factorial = factorial * qint(k as i64);
            let scaled = term.scale_laurent(&HbarLaurent::from_term(
                0,
                ChowElement::scalar(qint(1) / &factorial),
            ));
            out = out.add(&scaled);
        }
        out
    }

    /// Substitution `q_i -> q_i g_i(q)` for scalar unit multipliers on the
    /// class lattice.
    pub fn substitute(&self, multipliers: &[QSeries; 4]) -> Result<Self, CountError> {
        let g = self.max_grade;
        let lat = q_lattice();
        let mut out = Self::zero(g);
        for (beta, l) in &self.terms {
            let mut fac = QSeries::one(lat.clone(), g as i64);
            for (i, m) in multipliers.iter().enumerate() {
                if beta[i] > 0 {
                    fac = fac.mul(&m.pow(beta[i])?)?;
                }
            }
            for (v, s) in fac.terms() {
                let nb = add_class(beta, &class_of_exponent(v));
                if class_grade(&nb) > g {
                    continue;
                }
                out.insert_add(nb, &l.scale(s));
            }
        }
        Ok(out)
    }
}

/// The transformed table, indexed by curve class.
#[derive(Clone, Debug)]
pub struct JFunctionTable {
    pub max_grade: u32,
    entries: BTreeMap<ThreefoldClass, HbarLaurent>,
}

impl JFunctionTable {
    pub fn entry(&self, beta: &ThreefoldClass) -> Option<&HbarLaurent> {
        self.entries.get(beta)
    }

    pub fn classes(&self) -> impl Iterator<Item = &ThreefoldClass> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ThreefoldClass, &HbarLaurent)> {
        self.entries.iter()
    }
}

/// The solved change of variables together with the transformed table.
#[derive(Clone, Debug)]
pub struct MirrorMap {
    pub f0: QSeries,
    pub h: QSeries,
    pub f: [QSeries; 4],
    pub j: JFunctionTable,
}

impl MirrorMap {
    /// The substitution multipliers `e^{-f_i}` applied to the table.
    pub fn multipliers(&self) -> Result<[QSeries; 4], CountError> {
        Ok([
            self.f[0].neg().exp()?,
            self.f[1].neg().exp()?,
            self.f[2].neg().exp()?,
            self.f[3].neg().exp()?,
        ])
    }
}

fn transform(
    table: &BetaSeries,
    f0: &QSeries,
    h: &QSeries,
    f: &[QSeries; 4],
) -> Result<BetaSeries, CountError> {
    let g = table.max_grade;
    let multipliers = [
        f[0].neg().exp()?,
        f[1].neg().exp()?,
        f[2].neg().exp()?,
        f[3].neg().exp()?,
    ];
    let substituted = table.substitute(&multipliers)?;
    let mut exponent = BetaSeries::zero(g);
    for (v, c) in f0.terms() {
        let l = HbarLaurent::from_term(0, ChowElement::scalar(-c.clone()));
        exponent.insert_add(class_of_exponent(v), &l);
    }
    for (v, c) in h.terms() {
        let l = HbarLaurent::from_term(-1, ChowElement::scalar(-c.clone()));
        exponent.insert_add(class_of_exponent(v), &l);
    }
    for (i, fi) in f.iter().enumerate() {
        for (v, c) in fi.terms() {
            let l = HbarLaurent::from_term(-1, ChowElement::h(i + 1).scale(&-c.clone()));
            exponent.insert_add(class_of_exponent(v), &l);
        }
    }
    Ok(exponent.exp().mul(&substituted))
}

fn h_components(c: &ChowElement) -> [Q; 4] {
    [
        c.coeff(1, 0, 0, 0),
        c.coeff(0, 1, 0, 0),
        c.coeff(0, 0, 1, 0),
        c.coeff(0, 0, 0, 1),
    ]
}

/// Solves the normalization fixed point grade by grade: the change of
/// variables `(f0, h, f_i)` making every positive class of the transformed
/// table vanish at the scalar and linear parts of orders zero and minus one.
pub fn mirror_map(table: &IFunctionTable) -> Result<MirrorMap, CountError> {
    let g = table.max_grade;
    let series = BetaSeries::from_table(table);
    let lat = q_lattice();
    let mut f0 = QSeries::zero(lat.clone(), g as i64);
    let mut h = QSeries::zero(lat.clone(), g as i64);
    let mut f = [f0.clone(), f0.clone(), f0.clone(), f0.clone()];
    for grade in 1..=g {
        let t = transform(&series, &f0, &h, &f)?;
        for (beta, l) in t.iter() {
            if class_grade(beta) != grade {
                continue;
            }
            let v: Vec<i64> = beta.map(i64::from).to_vec();
            let s0 = l.coeff(0).scalar_part();
            if !s0.is_zero() {
                f0 = f0.add(&QSeries::monomial(lat.clone(), g as i64, v.clone(), s0)?)?;
            }
            let order_minus_one = l.coeff(-1);
            let s1 = order_minus_one.scalar_part();
            if !s1.is_zero() {
                h = h.add(&QSeries::monomial(lat.clone(), g as i64, v.clone(), s1)?)?;
            }
            for (i, hi) in h_components(&order_minus_one).into_iter().enumerate() {
                if !hi.is_zero() {
                    f[i] = f[i].add(&QSeries::monomial(lat.clone(), g as i64, v.clone(), hi)?)?;
                }
            }
        }
    }
    let t = transform(&series, &f0, &h, &f)?;
    let mut entries = BTreeMap::new();
    for (beta, l) in t.iter() {
        if *beta != [0, 0, 0, 0] {
            let order_minus_one = l.coeff(-1);
            if !l.coeff(0).scalar_part().is_zero()
                || !order_minus_one.scalar_part().is_zero()
                || h_components(&order_minus_one).iter().any(|c| !c.is_zero())
            {
                return Err(CountError::NormalizationFailed(*beta));
            }
        }
        entries.insert(*beta, l.clone());
    }
    Ok(MirrorMap {
        f0,
        h,
        f,
        j: JFunctionTable { max_grade: g, entries },
    })
}

/// The curve count of a class: the coefficient of `H1^2 H2 H3` in the Euler
/// class times the second-order pole of the transformed entry.
pub fn extract_curve_count(j: &JFunctionTable, beta: &ThreefoldClass) -> Result<Q, CountError> {
    if class_grade(beta) > j.max_grade {
        return Err(CountError::ClassOutOfRange(*beta, j.max_grade));
    }
    let pole = match j.entry(beta) {
        Some(l) => l.coeff(-2),
        None => ChowElement::zero(),
    };
    Ok(euler_class().mul(&pole).coeff(2, 1, 1, 0))
}

/// Solves `u_i(q) g_i(q u(q)) = 1` for unit multipliers `g_i`, so the two
/// substitutions compose to the identity.
pub fn invert_multipliers(multipliers: &[QSeries; 4]) -> Result<[QSeries; 4], CountError> {
    let trunc = multipliers.iter().map(|m| m.truncation()).min().unwrap_or(0);
    let lat = q_lattice();
    let one = QSeries::one(lat, trunc);
    let mut u = [one.clone(), one.clone(), one.clone(), one];
    for _ in 0..=trunc {
        let mut next = u.clone();
        for (i, m) in multipliers.iter().enumerate() {
            next[i] = m.substitute(&u)?.inverse()?;
        }
        u = next;
    }
    Ok(u)
}
