//! Central arrangements, their canonical forms, and the deletion,
//! restriction, localization and essentialization constructions.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::intser::IntOrString;
use crate::exact::multipoly::var_name;
use crate::exact::{gcd_all, rref, Integer, MultiPoly, RatMatrix, Rational};
use crate::indexset::IndexSet;

/// A linear form up to scalar: primitive, first nonzero entry positive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm(Vec<Integer>);

impl LinearForm {
    /// Normalizes `coeffs`; `None` for the zero vector.
    pub fn new(coeffs: Vec<Integer>) -> Option<Self> {
        let g = gcd_all(coeffs.iter());
        if g.is_zero() {
            return None;
        }
        let first_neg = coeffs.iter().find(|c| !c.is_zero())?.is_negative();
        let g = if first_neg { -g } else { g };
        Some(Self(coeffs.into_iter().map(|c| c / &g).collect()))
    }

    pub fn from_i64(coeffs: &[i64]) -> Option<Self> {
        Self::new(coeffs.iter().map(|&c| Integer::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Index of the last nonzero coefficient.
    pub fn last_nonzero(&self) -> usize {
        self.0
            .iter()
            .rposition(|c| !c.is_zero())
            .expect("nonzero form")
    }

    pub fn to_poly(&self) -> MultiPoly {
        MultiPoly::linear(&self.0)
    }

    pub fn to_rationals(&self) -> Vec<Rational> {
        self.0.iter().cloned().map(Rational::from_integer).collect()
    }

    pub fn is_coordinate(&self) -> Option<usize> {
        let nz: Vec<usize> = (0..self.0.len())
            .filter(|&i| !self.0[i].is_zero())
            .collect();
        (nz.len() == 1).then(|| nz[0])
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for LinearForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<IntOrString> = self.0.iter().map(IntOrString::from).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LinearForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<IntOrString> = Vec::deserialize(d)?;
        let coeffs = v
            .into_iter()
            .map(Integer::try_from)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Self::new(coeffs).ok_or_else(|| serde::de::Error::custom("zero linear form"))
    }
}

/// Row-reduced basis of the span of some forms, for exact membership tests.
#[derive(Clone, Debug)]
pub struct Span {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Span {
    pub fn of<'a, I: IntoIterator<Item = &'a LinearForm>>(dim: usize, forms: I) -> Self {
        Self::of_rationals(
            dim,
            forms.into_iter().map(LinearForm::to_rationals).collect(),
        )
    }

    pub fn of_rationals(dim: usize, rows: Vec<Vec<Rational>>) -> Self {
        let r = rref(&RatMatrix::from_rows(dim, rows));
        let rows = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Self {
            dim,
            rows,
            pivots: r.pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Rows of the reduced echelon basis; each has a 1 at its pivot column.
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn contains(&self, form: &LinearForm) -> bool {
        assert_eq!(form.dim(), self.dim);
        let mut v = form.to_rationals();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// A flat of a particular arrangement, stored as the closed set of
/// hyperplanes containing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlatSpec {
    closed: IndexSet,
    rank: usize,
}

impl FlatSpec {
    /// The intersection of the listed hyperplanes; the set is replaced by its
    /// closure.
    pub fn new(a: &Arrangement, generators: &[usize]) -> Result<Self> {
        for &i in generators {
            a.check_index(i)?;
        }
        Ok(a.closure(generators.iter().copied()))
    }

    pub(crate) fn from_parts(closed: IndexSet, rank: usize) -> Self {
        Self { closed, rank }
    }

    pub fn whole_space(a: &Arrangement) -> Self {
        Self {
            closed: IndexSet::new(a.len()),
            rank: 0,
        }
    }

    pub fn closed(&self) -> &IndexSet {
        &self.closed
    }

    pub fn indices(&self) -> Vec<usize> {
        self.closed.iter().collect()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// Result of [`Arrangement::essentialize`]: the essential arrangement plus
/// the coordinate map used to produce it.
#[derive(Clone, Debug)]
pub struct Essentialization {
    pub arrangement: Arrangement,
    /// The map `V -> K^r`: coordinate `j` of the image of `x` is
    /// `projection[j] . x`. Every form of the input is `form(x) =
    /// essential_form(projection x)` up to the positive normalization factor.
    pub projection: Vec<Vec<Rational>>,
    /// Original coordinates carried over verbatim (the pivots).
    pub pivots: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    dim: usize,
    forms: Vec<LinearForm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl Arrangement {
    /// Normalizes the forms and rejects zero or proportional ones.
    pub fn build(dim: usize, raw: Vec<Vec<Integer>>) -> Result<Self> {
        let mut forms: Vec<LinearForm> = Vec::with_capacity(raw.len());
        for (index, coeffs) in raw.into_iter().enumerate() {
            if coeffs.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: coeffs.len(),
                });
            }
            let form = LinearForm::new(coeffs).ok_or(Error::ZeroForm { index })?;
            if let Some(first) = forms.iter().position(|f| *f == form) {
                return Err(Error::DuplicateHyperplane {
                    first,
                    second: index,
                });
            }
            forms.push(form);
        }
        Ok(Self {
            dim,
            forms,
            name: None,
        })
    }

    pub fn from_i64(dim: usize, raw: &[&[i64]]) -> Result<Self> {
        Self::build(
            dim,
            raw.iter()
                .map(|r| r.iter().map(|&c| Integer::from(c)).collect())
                .collect(),
        )
    }

    pub fn empty(dim: usize) -> Self {
        Self {
            dim,
            forms: Vec::new(),
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn form(&self, i: usize) -> &LinearForm {
        &self.forms[i]
    }

    pub fn rank(&self) -> usize {
        Span::of(self.dim, &self.forms).rank()
    }

    pub fn is_essential(&self) -> bool {
        self.rank() == self.dim
    }

    /// Index of a hyperplane, if present.
    pub fn position(&self, form: &LinearForm) -> Option<usize> {
        self.forms.iter().position(|f| f == form)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.forms.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.forms.len(),
            })
        }
    }

    /// Defining polynomial `Q(A)`, the product of the forms.
    pub fn defining_polynomial(&self) -> MultiPoly {
        self.forms
            .iter()
            .fold(MultiPoly::one(self.dim), |acc, f| &acc * &f.to_poly())
    }

    /// Closure of a set of hyperplanes: every hyperplane containing their
    /// intersection.
    pub fn closure<I: IntoIterator<Item = usize>>(&self, generators: I) -> FlatSpec {
        let gens: Vec<usize> = generators.into_iter().collect();
        let span = Span::of(self.dim, gens.iter().map(|&i| &self.forms[i]));
        let mut closed = IndexSet::new(self.len());
        for (i, f) in self.forms.iter().enumerate() {
            if gens.contains(&i) || span.contains(f) {
                closed.insert(i);
            }
        }
        FlatSpec::from_parts(closed, span.rank())
    }

    pub fn delete(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        let mut forms = self.forms.clone();
        forms.remove(i);
        Ok(Self {
            dim: self.dim,
            forms,
            name: None,
        })
    }

    /// Adds a hyperplane at the end.
    pub fn add(&self, raw: Vec<Integer>) -> Result<Self> {
        let mut all: Vec<Vec<Integer>> = self.forms.iter().map(|f| f.0.clone()).collect();
        all.push(raw);
        Self::build(self.dim, all)
    }

    /// Coordinate eliminated by [`Arrangement::restrict`] for hyperplane `i`.
    pub fn restriction_coordinate(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(self.forms[i].last_nonzero())
    }

    /// The restriction `A^H` to hyperplane `i`, in the coordinates of `H`
    /// obtained by dropping the eliminated variable.
    pub fn restrict(&self, i: usize) -> Result<Self> {
        let k = self.restriction_coordinate(i)?;
        let a = &self.forms[i].0;
        let mut forms: Vec<LinearForm> = Vec::new();
        for (j, f) in self.forms.iter().enumerate() {
            if j == i {
                continue;
            }
            let b = &f.0;
            let image: Vec<Integer> = (0..self.dim)
                .filter(|&c| c != k)
                .map(|c| &a[k] * &b[c] - &b[k] * &a[c])
                .collect();
            if let Some(g) = LinearForm::new(image) {
                if !forms.contains(&g) {
                    forms.push(g);
                }
            }
        }
        Ok(Self {
            dim: self.dim - 1,
            forms,
            name: None,
        })
    }

    /// The hyperplanes containing the flat, in their original order.
    pub fn localize(&self, x: &FlatSpec) -> Self {
        Self {
            dim: self.dim,
            forms: x.closed().iter().map(|i| self.forms[i].clone()).collect(),
            name: None,
        }
    }

    /// Projects onto the pivot coordinates of the reduced row echelon form
    /// of the forms, giving an essential arrangement of dimension `rank`.
    pub fn essentialize(&self) -> Essentialization {
        let span = Span::of(self.dim, &self.forms);
        let pivots = span.pivots().to_vec();
        let forms = self
            .forms
            .iter()
            .map(|f| {
                LinearForm::new(pivots.iter().map(|&p| f.0[p].clone()).collect())
                    .expect("a nonzero form has a nonzero pivot coordinate")
            })
            .collect();
        Essentialization {
            arrangement: Self {
                dim: pivots.len(),
                forms,
                name: self.name.clone(),
            },
            projection: span.rows().to_vec(),
            pivots,
        }
    }

    /// Parses the text format: `dim <l>` followed by one form per line.
    /// Blank lines and `#` comments are ignored; a leading `# name: ...`
    /// comment sets the name.
    pub fn parse(text: &str) -> Result<Self> {
        let mut dim: Option<usize> = None;
        let mut name = None;
        let mut raw = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = line.trim();
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(v) = comment.trim().strip_prefix("name:") {
                    if dim.is_none() {
                        name = Some(v.trim().to_string());
                    }
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            match dim {
                None => {
                    let rest = line
                        .strip_prefix("dim")
                        .ok_or_else(|| parse_err("expected `dim <l>`".into()))?;
                    let d: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| parse_err(format!("bad dimension {:?}", rest.trim())))?;
                    if d == 0 {
                        return Err(parse_err("dimension must be at least 1".into()));
                    }
                    dim = Some(d);
                }
                Some(d) => {
                    let coeffs = line
                        .split_whitespace()
                        .map(|t| {
                            t.parse::<Integer>()
                                .map_err(|_| parse_err(format!("bad integer {t:?}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    if coeffs.len() != d {
                        return Err(parse_err(format!(
                            "expected {d} coefficients, found {}",
                            coeffs.len()
                        )));
                    }
                    raw.push(coeffs);
                }
            }
        }
        let dim = dim.ok_or(Error::Parse {
            line: 0,
            message: "missing `dim <l>` header".into(),
        })?;
        let mut a = Self::build(dim, raw)?;
        a.name = name;
        Ok(a)
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.name {
            out.push_str(&format!("# name: {n}\n"));
        }
        out.push_str(&format!("dim {}\n", self.dim));
        for f in &self.forms {
            let parts: Vec<String> = f.0.iter().map(|c| c.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    /// Human-readable product of the forms, e.g. `x*y*(x - y)`.
    pub fn product_string(&self) -> String {
        if self.forms.is_empty() {
            return "1".into();
        }
        self.forms
            .iter()
            .map(|f| {
                let s = f.to_string();
                if f.is_coordinate().is_some() {
                    s
                } else {
                    format!("({s})")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn var_names(&self) -> Vec<String> {
        (0..self.dim).map(|i| var_name(self.dim, i)).collect()
    }
}

impl fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Arrangement(dim {}, {})",
            self.dim,
            self.product_string()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean3() -> Arrangement {
        Arrangement::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap()
    }

    #[test]
    fn normalization() {
        let f = LinearForm::from_i64(&[0, -4, 6]).unwrap();
        assert_eq!(
            f.coeffs(),
            &[Integer::from(0), Integer::from(2), Integer::from(-3)]
        );
        assert!(LinearForm::from_i64(&[0, 0]).is_none());
    }

    #[test]
    fn build_rejects_duplicates_and_zero() {
        let err = Arrangement::from_i64(2, &[&[1, 0], &[-2, 0]]).unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateHyperplane {
                first: 0,
                second: 1
            }
        );
        let err = Arrangement::from_i64(2, &[&[1, 0], &[0, 0]]).unwrap_err();
        assert_eq!(err, Error::ZeroForm { index: 1 });
        assert!(Arrangement::from_i64(2, &[&[1, 0, 0]]).is_err());
    }

    #[test]
    fn delete_and_restrict_boolean() {
        let b = boolean3();
        let d = b.delete(0).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d.form(0), b.form(1));
        let r = b.restrict(0).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.len(), 2);
        assert!(b.delete(3).is_err());
        let single = Arrangement::from_i64(2, &[&[1, 1]]).unwrap();
        assert!(single.delete(0).unwrap().is_empty());
    }

    #[test]
    fn restriction_collapses_multiplicities() {
        // x, y, x - y restricted to x = 0: y and -y collapse to one line
        let a = Arrangement::from_i64(2, &[&[1, 0], &[0, 1], &[1, -1]]).unwrap();
        let r = a.restrict(0).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn localize_and_closure() {
        let b = boolean3();
        let x = FlatSpec::new(&b, &[0, 1]).unwrap();
        assert_eq!(x.rank(), 2);
        assert_eq!(b.localize(&x).len(), 2);
        assert_eq!(b.localize(&FlatSpec::whole_space(&b)).len(), 0);
        // in a pencil, two lines close up to all of them
        let p =
            Arrangement::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
        let x = FlatSpec::new(&p, &[0, 1]).unwrap();
        assert_eq!(x.indices(), vec![0, 1, 2]);
    }

    #[test]
    fn essentialize_non_essential() {
        let a =
            Arrangement::from_i64(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, -2, 0]]).unwrap();
        assert!(!a.is_essential());
        let e = a.essentialize();
        assert_eq!(e.arrangement.dim(), 2);
        assert_eq!(e.arrangement.len(), 4);
        assert!(e.arrangement.is_essential());
        let b = boolean3();
        assert_eq!(b.essentialize().arrangement, b);
    }

    #[test]
    fn text_round_trip() {
        let a = Arrangement::from_i64(3, &[&[1, 0, 0], &[1, -1, 0], &[0, 2, -3]])
            .unwrap()
            .with_name("sample");
        let text = a.emit();
        assert_eq!(Arrangement::parse(&text).unwrap(), a);
        let parsed = Arrangement::parse("# comment\n\ndim 2\n1 0\n  # inner\n0 -3\n").unwrap();
        assert_eq!(
            parsed.form(1).coeffs(),
            &[Integer::from(0), Integer::from(1)]
        );
        assert!(matches!(
            Arrangement::parse("dim 2\n1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Arrangement::parse("1 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn display() {
        let a = Arrangement::from_i64(3, &[&[1, 0, 0], &[1, -1, 0], &[0, 2, -3]]).unwrap();
        assert_eq!(a.product_string(), "x*(x - y)*(2*y - 3*z)");
    }
}
