//! Named lattices and direct-sum expressions such as `U+A2^5+A2(-1)`.

use super::lattice::IntegralLattice;
use crate::error::{Error, Result};

/// Negated Cartan matrix of a simply-laced Dynkin diagram given by its edges.
fn from_diagram(n: usize, edges: &[(usize, usize)]) -> IntegralLattice {
    let mut g = vec![vec![0i64; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = -2;
    }
    for &(a, b) in edges {
        g[a][b] = 1;
        g[b][a] = 1;
    }
    IntegralLattice::new(g).expect("symmetric by construction")
}

pub fn a(n: usize) -> IntegralLattice {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    from_diagram(n, &edges)
}

pub fn d(n: usize) -> IntegralLattice {
    assert!(n >= 4);
    let mut edges: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
    edges.push((n - 3, n - 1));
    from_diagram(n, &edges)
}

pub fn e(n: usize) -> IntegralLattice {
    assert!((6..=8).contains(&n));
    // Bourbaki labels 1-3-4-5-6-7-8 with 2 attached to 4, shifted to 0-based
    let mut edges = vec![(0, 2), (2, 3), (1, 3)];
    edges.extend((4..n).map(|i| (i - 1, i)));
    from_diagram(n, &edges)
}

pub fn u() -> IntegralLattice {
    IntegralLattice::new(vec![vec![0, 1], vec![1, 0]]).unwrap()
}

/// The odd unimodular lattice `diag(1, -1, ..., -1)` of signature `(1, n)`.
pub fn odd_unimodular(n: usize) -> IntegralLattice {
    let mut g = vec![vec![0i64; n + 1]; n + 1];
    g[0][0] = 1;
    for (i, row) in g.iter_mut().enumerate().skip(1) {
        row[i] = -1;
    }
    IntegralLattice::new(g).unwrap()
}

/// `U`, `A1`..`A8`, `D4`..`D8`, `E6`, `E7`, `E8` or `I(1,n)`.
pub fn named_lattice(name: &str) -> Result<IntegralLattice> {
    let name = name.trim();
    let unknown = || Error::UnknownLattice(name.to_string());
    if name == "U" {
        return Ok(u());
    }
    if let Some(rest) = name.strip_prefix("I(1,").and_then(|r| r.strip_suffix(')')) {
        let n: usize = rest.trim().parse().map_err(|_| unknown())?;
        return if n >= 1 { Ok(odd_unimodular(n)) } else { Err(unknown()) };
    }
    let (family, idx) = name.split_at(1.min(name.len()));
    let n: usize = idx.parse().map_err(|_| unknown())?;
    match (family, n) {
        ("A", 1..=8) => Ok(a(n)),
        ("D", 4..=8) => Ok(d(n)),
        ("E", 6..=8) => Ok(e(n)),
        _ => Err(unknown()),
    }
}

/// Parses `term (+ term)*` where `term = NAME [ "(" n ")" ] [ "^" k ]`.
pub fn parse_lattice(expr: &str) -> Result<IntegralLattice> {
    let expr: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let expr = expr.replace('⊕', "+");
    if expr.is_empty() {
        return Err(Error::Parse("empty lattice expression".into()));
    }
    split_terms(&expr)?
        .into_iter()
        .try_fold(IntegralLattice::zero(), |acc, t| Ok(acc.direct_sum(&parse_term(t)?)))
}

/// Splits on `+` outside parentheses.
fn split_terms(s: &str) -> Result<Vec<&str>> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
        }
    }
    out.push(&s[start..]);
    if depth != 0 || out.iter().any(|t| t.is_empty()) {
        return Err(Error::Parse(format!("malformed lattice expression `{s}`")));
    }
    Ok(out)
}

fn parse_term(t: &str) -> Result<IntegralLattice> {
    let bad = || Error::Parse(format!("malformed lattice term `{t}`"));
    let (body, power) = match t.rsplit_once('^') {
        Some((b, k)) => (b, k.parse::<usize>().map_err(|_| bad())?),
        None => (t, 1),
    };
    if body.starts_with("I(") {
        return Ok(named_lattice(body)?.power(power));
    }
    let (name, scale) = match body.find('(') {
        Some(i) => {
            let inner = body[i + 1..].strip_suffix(')').ok_or_else(bad)?;
            let n: i64 = inner.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            (&body[..i], n)
        }
        None => (body, 1),
    };
    Ok(named_lattice(name)?.scale(scale).power(power))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn standard_grams() {
        assert_eq!(named_lattice("U").unwrap().gram(), &[vec![0, 1], vec![1, 0]]);
        assert_eq!(named_lattice("A2").unwrap().gram(), &[vec![-2, 1], vec![1, -2]]);
        assert!(named_lattice("F4").is_err());
        assert!(named_lattice("D3").is_err());
        assert!(named_lattice("I(1,0)").is_err());
    }

    #[test]
    fn root_lattice_determinants() {
        // |det| of A_n is n+1, D_n is 4, E6 3, E7 2, E8 1; all negative definite
        for n in 1..=8 {
            let l = a(n);
            assert_eq!(l.discriminant_order(), BigInt::from(n + 1));
            assert_eq!(l.signature().unwrap(), (0, n));
        }
        for n in 4..=8 {
            assert_eq!(d(n).discriminant_order(), BigInt::from(4));
        }
        assert_eq!(e(6).discriminant_order(), BigInt::from(3));
        assert_eq!(e(7).discriminant_order(), BigInt::from(2));
        assert_eq!(e(8).discriminant_order(), BigInt::from(1));
        assert_eq!(e(8).signature().unwrap(), (0, 8));
    }

    #[test]
    fn expressions() {
        let m = parse_lattice("U+A2^5").unwrap();
        assert_eq!(m.rank(), 12);
        assert_eq!(m.discriminant_order(), BigInt::from(243));
        let t = parse_lattice("A2(-1) + A2^4").unwrap();
        assert_eq!(t.signature().unwrap(), (2, 8));
        let t = parse_lattice("A2(-2)+A2(2)").unwrap();
        assert_eq!(t.gram()[0], vec![4, -2, 0, 0]);
        assert_eq!(parse_lattice("I(1,6)").unwrap().signature().unwrap(), (1, 6));
        assert!(parse_lattice("U+").is_err());
        assert!(parse_lattice("A2(0)").is_err());
        assert!(parse_lattice("A2(-1").is_err());
    }
}
