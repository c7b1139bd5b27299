//! Deterministic permutation representations of the group families used
//! throughout the crate, plus `.gens` files and corpus manifests.

mod corpus;
mod field;
mod gens_file;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

pub use corpus::{corpus, corpus_with_caps, parse_manifest, profile_specs, read_manifest, Profile};
pub use field::Field;
pub use gens_file::{format_gens, parse_gens, parse_gens_str, write_gens};

use crate::characteristic::{is_prime, prime_factors};
use crate::error::{Error, Result};
use crate::group::{Caps, Group};
use crate::perm::{gcd, Permutation};
use field::order_mod;

/// A buildable group description. `Display` gives the canonical spec
/// string, which parses back to the same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic(usize),
    ElementaryAbelian {
        p: usize,
        k: usize,
    },
    /// Dihedral group of the given order.
    Dihedral(usize),
    /// Generalized quaternion group of the given order (a power of two, ≥ 8).
    Quaternion(usize),
    Sym(usize),
    Alt(usize),
    Psl2(usize),
    Agl1(usize),
    DirectProduct(Vec<GroupSpec>),
    /// `F_p^δ ⋊ C_c`, the generator of `C_c` acting as multiplication by
    /// `scalar` (default: least residue of order `gcd(c, p - 1)`).
    ScalarSemidirect {
        p: usize,
        delta: usize,
        c: usize,
        scalar: Option<usize>,
    },
    /// `C_p ⋊ C_{q^m}` with the cyclic factor acting through an automorphism
    /// of order exactly `q`.
    CpByCqm {
        p: usize,
        q: usize,
        m: usize,
    },
    /// `AGL_1(3) × (F_5² ⋊ ⟨2I⟩)`, an order-600 group that meets the
    /// coprimality and distinct-prime conditions yet has a dependent pair
    /// with no power relation.
    Example600,
    FromFile(PathBuf),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupSpec::*;
        match self {
            Cyclic(n) => write!(f, "C{n}"),
            ElementaryAbelian { p, k } => write!(f, "C{p}^{k}"),
            Dihedral(n) => write!(f, "D{n}"),
            Quaternion(n) => write!(f, "Q{n}"),
            Sym(n) => write!(f, "Sym{n}"),
            Alt(n) => write!(f, "Alt{n}"),
            Psl2(q) => write!(f, "PSL2({q})"),
            Agl1(p) => write!(f, "AGL1({p})"),
            DirectProduct(parts) => {
                f.write_str("DirectProduct(")?;
                for (i, s) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                f.write_str(")")
            }
            ScalarSemidirect {
                p,
                delta,
                c,
                scalar,
            } => match scalar {
                Some(s) => write!(f, "ScalarSemidirect({p},{delta},{c},{s})"),
                None => write!(f, "ScalarSemidirect({p},{delta},{c})"),
            },
            CpByCqm { p, q, m } => write!(f, "CpByCqm({p},{q},{m})"),
            Example600 => f.write_str("Example600"),
            FromFile(path) => write!(f, "@{}", path.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupSpec> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix('@') {
            return Ok(GroupSpec::FromFile(PathBuf::from(path)));
        }
        let mut p = Parser { s, pos: 0 };
        let spec = p.spec()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(Error::InvalidSpec(format!(
                "trailing input in {s:?} at byte {}",
                p.pos
            )));
        }
        Ok(spec)
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.s[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&self) -> Option<char> {
        self.s[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '^' || c == '_')
        {
            self.pos += 1;
        }
        &self.s[start..self.pos]
    }

    fn int(&mut self) -> Result<usize> {
        let w = self.word().to_string();
        w.parse()
            .map_err(|_| Error::InvalidSpec(format!("expected integer, found {w:?}")))
    }

    fn ints(&mut self) -> Result<Vec<usize>> {
        let mut out = vec![self.int()?];
        while self.eat(',') {
            out.push(self.int()?);
        }
        if !self.eat(')') {
            return Err(Error::InvalidSpec("expected ')'".into()));
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<GroupSpec> {
        let name = self.word().to_string();
        if name.is_empty() {
            return Err(Error::InvalidSpec(format!(
                "expected a group name in {:?}",
                self.s
            )));
        }
        if !self.eat('(') {
            return alias(&name);
        }
        match name.as_str() {
            "DirectProduct" => {
                let mut parts = vec![self.spec()?];
                while self.eat(',') {
                    parts.push(self.spec()?);
                }
                if !self.eat(')') {
                    return Err(Error::InvalidSpec("expected ')'".into()));
                }
                Ok(GroupSpec::DirectProduct(parts))
            }
            "FromFile" => {
                let rest = &self.s[self.pos..];
                let end = rest
                    .rfind(')')
                    .ok_or_else(|| Error::InvalidSpec("unterminated FromFile".into()))?;
                self.pos += end + 1;
                Ok(GroupSpec::FromFile(PathBuf::from(rest[..end].trim())))
            }
            _ => {
                let args = self.ints()?;
                call(&name, &args)
            }
        }
    }
}

fn arity(name: &str, args: &[usize], n: std::ops::RangeInclusive<usize>) -> Result<()> {
    if n.contains(&args.len()) {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!(
            "{name} takes {:?} arguments, got {}",
            n,
            args.len()
        )))
    }
}

fn call(name: &str, a: &[usize]) -> Result<GroupSpec> {
    use GroupSpec::*;
    let one = |a: &[usize]| -> Result<usize> {
        arity(name, a, 1..=1)?;
        Ok(a[0])
    };
    Ok(match name {
        "Cyclic" | "C" => Cyclic(one(a)?),
        "ElementaryAbelian" => {
            arity(name, a, 2..=2)?;
            ElementaryAbelian { p: a[0], k: a[1] }
        }
        "Dihedral" | "D" => Dihedral(one(a)?),
        "Quaternion" | "GeneralizedQuaternion" | "Q" => Quaternion(one(a)?),
        "Sym" | "S" => Sym(one(a)?),
        "Alt" | "A" => Alt(one(a)?),
        "PSL2" => Psl2(one(a)?),
        "PSL" => {
            arity(name, a, 2..=2)?;
            if a[0] != 2 {
                return Err(Error::InvalidSpec("only PSL(2,q) is supported".into()));
            }
            Psl2(a[1])
        }
        "AGL1" => Agl1(one(a)?),
        "AGL" => {
            arity(name, a, 2..=2)?;
            if a[0] != 1 {
                return Err(Error::InvalidSpec("only AGL(1,p) is supported".into()));
            }
            Agl1(a[1])
        }
        "ScalarSemidirect" => {
            arity(name, a, 3..=4)?;
            ScalarSemidirect {
                p: a[0],
                delta: a[1],
                c: a[2],
                scalar: a.get(3).copied(),
            }
        }
        "CpByCqm" => {
            arity(name, a, 3..=3)?;
            CpByCqm {
                p: a[0],
                q: a[1],
                m: a[2],
            }
        }
        _ => return Err(Error::InvalidSpec(format!("unknown group family {name:?}"))),
    })
}

/// Short names: `C6`, `C2^3`, `D8`, `Q8`, `Sym4`, `Alt5`, `A5`, `S4`.
fn alias(name: &str) -> Result<GroupSpec> {
    use GroupSpec::*;
    if name.ends_with("Example600") {
        return Ok(Example600);
    }
    let num = |rest: &str| -> Result<usize> {
        rest.parse()
            .map_err(|_| Error::InvalidSpec(format!("unknown group {name:?}")))
    };
    for (prefix, make) in [("Sym", Sym as fn(usize) -> GroupSpec), ("Alt", Alt)] {
        if let Some(rest) = name.strip_prefix(prefix) {
            return Ok(make(num(rest)?));
        }
    }
    let (head, rest) = name.split_at(1.min(name.len()));
    match head {
        "C" => match rest.split_once('^') {
            Some((p, k)) => Ok(ElementaryAbelian {
                p: num(p)?,
                k: num(k)?,
            }),
            None => Ok(Cyclic(num(rest)?)),
        },
        "D" => Ok(Dihedral(num(rest)?)),
        "Q" => Ok(Quaternion(num(rest)?)),
        "S" => Ok(Sym(num(rest)?)),
        "A" => Ok(Alt(num(rest)?)),
        _ => Err(Error::InvalidSpec(format!("unknown group {name:?}"))),
    }
}

pub fn build(spec: &GroupSpec) -> Result<Group> {
    build_with_caps(spec, Caps::default())
}

pub fn build_with_caps(spec: &GroupSpec, caps: Caps) -> Result<Group> {
    let (degree, gens) = generators(spec)?;
    let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
    Group::from_generators(spec.to_string(), degree, gens, caps)
}

/// Parses and builds in one step.
pub fn build_str(spec: &str) -> Result<Group> {
    build(&spec.parse()?)
}

/// The order-600 example together with the elements `x` (the scalar 2 on
/// `F_5²`, order 4) and `y` (`z ↦ 2z` on `F_3`, order 2).
pub fn example600() -> (Group, usize, usize) {
    let g = build(&GroupSpec::Example600).expect("fixed construction");
    let n = g.degree();
    let mut x = (0..n as u32).collect::<Vec<_>>();
    for v in 0..25u32 {
        let (a, b) = (v % 5, v / 5);
        x[3 + v as usize] = 3 + (2 * a % 5) + 5 * (2 * b % 5);
    }
    let mut y = (0..n as u32).collect::<Vec<_>>();
    y.swap(1, 2);
    let id = |images: Vec<u32>| {
        g.index_of(&Permutation::new(images).expect("bijection"))
            .expect("element of the group")
    };
    let (x, y) = (id(x), id(y));
    (g, x, y)
}

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidSpec(msg.into()))
}

fn cycle(degree: usize, pts: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = pts.into_iter().collect();
    Permutation::from_cycles(degree, &[&pts]).expect("valid cycle")
}

fn map_points(degree: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images(&(0..degree).map(f).collect::<Vec<_>>()).expect("bijective map")
}

fn generators(spec: &GroupSpec) -> Result<(usize, Vec<Permutation>)> {
    use GroupSpec::*;
    Ok(match *spec {
        Cyclic(n) => {
            if n == 0 {
                return invalid("cyclic group of order 0");
            }
            (n, vec![cycle(n, 0..n)])
        }
        ElementaryAbelian { p, k } => {
            if !is_prime(p) {
                return invalid(format!("{p} is not prime"));
            }
            let d = (p * k).max(1);
            (d, (0..k).map(|i| cycle(d, i * p..(i + 1) * p)).collect())
        }
        Dihedral(n) => {
            if n < 2 || n % 2 == 1 {
                return invalid(format!("dihedral order {n} must be even"));
            }
            let m = n / 2;
            match m {
                1 => (2, vec![cycle(2, 0..2)]),
                2 => (4, vec![cycle(4, 0..2), cycle(4, 2..4)]),
                _ => (m, vec![cycle(m, 0..m), map_points(m, |i| (m - i) % m)]),
            }
        }
        Quaternion(n) => {
            if n < 8 || !n.is_power_of_two() {
                return invalid(format!("quaternion order {n} must be a power of two ≥ 8"));
            }
            let m = n / 2;
            // (i, j) ↦ a^i b^j, with a^m = 1, b² = a^{m/2}, a^b = a⁻¹
            let code = |i: usize, j: usize| i % m + m * j;
            let mul = |x: usize, (i2, j2): (usize, usize)| {
                let (i1, j1) = (x % m, x / m);
                match (j1, j2) {
                    (0, _) => code(i1 + i2, j2),
                    (_, 0) => code(i1 + m - i2 % m, 1),
                    _ => code(i1 + m - i2 % m + m / 2, 0),
                }
            };
            let a = map_points(n, |x| mul(x, (1, 0)));
            let b = map_points(n, |x| mul(x, (0, 1)));
            (n, vec![a, b])
        }
        Sym(n) => match n {
            0 => return invalid("Sym0"),
            1 => (1, vec![]),
            2 => (2, vec![cycle(2, 0..2)]),
            _ => (n, vec![cycle(n, 0..2), cycle(n, 0..n)]),
        },
        Alt(n) => match n {
            0 => return invalid("Alt0"),
            1 | 2 => (n, vec![]),
            3 => (3, vec![cycle(3, 0..3)]),
            _ if n % 2 == 1 => (n, vec![cycle(n, 0..3), cycle(n, 0..n)]),
            _ => (n, vec![cycle(n, 0..3), cycle(n, 1..n)]),
        },
        Psl2(q) => {
            let f = Field::new(q)?;
            let inf = q;
            let w = f.primitive();
            let mu = f.mul(w, w);
            let minus_one = f.neg(1);
            let point = |z: usize, h: &dyn Fn(usize) -> usize| if z == inf { inf } else { h(z) };
            let t = map_points(q + 1, |z| point(z, &|z| f.add(z, 1)));
            let d = map_points(q + 1, |z| point(z, &|z| f.mul(mu, z)));
            let s = map_points(q + 1, |z| {
                if z == inf {
                    0
                } else if z == 0 {
                    inf
                } else {
                    f.mul(minus_one, f.inv(z).expect("nonzero"))
                }
            });
            (q + 1, vec![t, d, s])
        }
        Agl1(q) => {
            let f = Field::new(q)?;
            let w = f.primitive();
            let t = map_points(q, |z| f.add(z, 1));
            let d = map_points(q, |z| f.mul(w, z));
            (q, vec![t, d])
        }
        DirectProduct(ref parts) => {
            let built: Vec<(usize, Vec<Permutation>)> =
                parts.iter().map(generators).collect::<Result<_>>()?;
            let total: usize = built.iter().map(|(d, _)| d).sum();
            let mut offset = 0;
            let mut gens = Vec::new();
            for (d, gs) in built {
                gens.extend(gs.iter().map(|g| g.shifted(offset, total)));
                offset += d;
            }
            (total.max(1), gens)
        }
        ScalarSemidirect {
            p,
            delta,
            c,
            scalar,
        } => scalar_semidirect(p, delta, c, scalar)?,
        CpByCqm { p, q, m } => {
            if !is_prime(p) || !is_prime(q) || m == 0 {
                return invalid("CpByCqm needs primes p, q and m ≥ 1");
            }
            if (p - 1) % q != 0 {
                return invalid(format!("{q} does not divide {p} - 1"));
            }
            let s = (2..p)
                .find(|&s| order_mod(s, p) == q)
                .expect("an element of order q exists");
            scalar_semidirect(p, 1, q.pow(m as u32), Some(s))?
        }
        Example600 => generators(&DirectProduct(vec![
            Agl1(3),
            ScalarSemidirect {
                p: 5,
                delta: 2,
                c: 4,
                scalar: Some(2),
            },
        ]))?,
        FromFile(ref path) => {
            let (degree, gens) = parse_gens(path)?;
            (degree, gens)
        }
    })
}

/// `F_p^δ` on `p^δ` affine points; the complement generator multiplies by
/// the scalar, and also runs a `c`-cycle on extra points when the scalar's
/// order is below `c`.
fn scalar_semidirect(
    p: usize,
    delta: usize,
    c: usize,
    scalar: Option<usize>,
) -> Result<(usize, Vec<Permutation>)> {
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if c == 0 || gcd(c as u64, p as u64) != 1 {
        return invalid(format!("complement order {c} must be coprime to {p}"));
    }
    let s = match scalar {
        Some(s) => {
            if s % p == 0 || !c.is_multiple_of(order_mod(s, p)) {
                return invalid(format!("scalar {s} must be a unit of order dividing {c}"));
            }
            s % p
        }
        None => {
            let want = gcd(c as u64, p as u64 - 1) as usize;
            (1..p)
                .find(|&s| order_mod(s, p) == want)
                .expect("cyclic unit group")
        }
    };
    let n = p.pow(delta as u32);
    let o = order_mod(s, p);
    let extra = if o < c { c } else { 0 };
    let degree = (n + extra).max(1);
    let mut gens: Vec<Permutation> = (0..delta)
        .map(|k| {
            let step = p.pow(k as u32);
            map_points(degree, |v| {
                if v >= n {
                    return v;
                }
                let digit = v / step % p;
                v - digit * step + (digit + 1) % p * step
            })
        })
        .collect();
    if c > 1 {
        gens.push(map_points(degree, |v| {
            if v >= n {
                return n + (v - n + 1) % c;
            }
            let mut out = 0;
            let mut rest = v;
            let mut place = 1;
            for _ in 0..delta {
                out += (rest % p) * s % p * place;
                rest /= p;
                place *= p;
            }
            out
        }));
    }
    Ok((degree, gens))
}

/// `|G|` predicted by the family's order formula, when one exists.
pub fn expected_order(spec: &GroupSpec) -> Option<usize> {
    use GroupSpec::*;
    let fact = |n: usize| (1..=n).product::<usize>();
    Some(match *spec {
        Cyclic(n) | Dihedral(n) | Quaternion(n) => n,
        ElementaryAbelian { p, k } => p.pow(k as u32),
        Sym(n) => fact(n),
        Alt(n) => (fact(n) / 2).max(1),
        Psl2(q) => q * (q * q - 1) / gcd(2, q as u64 - 1) as usize,
        Agl1(q) => q * (q - 1),
        DirectProduct(ref parts) => parts
            .iter()
            .map(expected_order)
            .product::<Option<usize>>()?,
        ScalarSemidirect { p, delta, c, .. } => p.pow(delta as u32) * c,
        CpByCqm { p, q, m } => p * q.pow(m as u32),
        Example600 => 600,
        FromFile(_) => return None,
    })
}

/// True when `n` is a positive power of a prime.
pub fn is_prime_power(n: usize) -> bool {
    prime_factors(n).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_strings_round_trip() {
        for s in [
            "C6",
            "C2^3",
            "D8",
            "Q16",
            "Sym4",
            "Alt5",
            "PSL2(7)",
            "AGL1(5)",
            "DirectProduct(C2,Sym3,DirectProduct(C3,C3))",
            "ScalarSemidirect(5,2,4)",
            "ScalarSemidirect(3,1,4,2)",
            "CpByCqm(3,2,2)",
            "Example600",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("Sym(3)".parse::<GroupSpec>().unwrap(), GroupSpec::Sym(3));
        assert_eq!("PSL(2,8)".parse::<GroupSpec>().unwrap(), GroupSpec::Psl2(8));
        assert_eq!("A5".parse::<GroupSpec>().unwrap(), GroupSpec::Alt(5));
        assert_eq!(
            "@a/b.gens".parse::<GroupSpec>().unwrap(),
            GroupSpec::FromFile("a/b.gens".into())
        );
        assert!("Foo(3)".parse::<GroupSpec>().is_err());
        assert!("C6)".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn order_formulas() {
        for s in [
            "C1",
            "C12",
            "C3^3",
            "D2",
            "D4",
            "D8",
            "D30",
            "Q8",
            "Q32",
            "Sym1",
            "Sym4",
            "Sym5",
            "Alt3",
            "Alt4",
            "Alt5",
            "Alt6",
            "PSL2(2)",
            "PSL2(4)",
            "PSL2(5)",
            "PSL2(7)",
            "PSL2(8)",
            "PSL2(9)",
            "PSL2(11)",
            "PSL2(13)",
            "AGL1(7)",
            "AGL1(9)",
            "ScalarSemidirect(5,2,4)",
            "ScalarSemidirect(3,2,8)",
            "ScalarSemidirect(7,1,1)",
            "CpByCqm(3,2,2)",
            "CpByCqm(7,3,2)",
            "Example600",
            "DirectProduct(Q8,C3)",
        ] {
            let spec: GroupSpec = s.parse().unwrap();
            let g = build(&spec).unwrap();
            assert_eq!(Some(g.order()), expected_order(&spec), "{s}");
            assert_eq!(g.name(), s);
        }
    }

    #[test]
    fn psl27_on_projective_line() {
        let g = build_str("PSL2(7)").unwrap();
        assert_eq!((g.order(), g.degree()), (168, 8));
    }

    #[test]
    fn quaternion_has_unique_involution() {
        for n in [8, 16, 32, 64] {
            let g = build(&GroupSpec::Quaternion(n)).unwrap();
            let inv = (0..g.order()).filter(|&x| g.elem_order(x) == 2).count();
            assert_eq!(inv, 1);
            assert!(!g.is_abelian());
        }
    }

    #[test]
    fn example600_elements() {
        let (g, x, y) = example600();
        assert_eq!(g.order(), 600);
        assert_eq!(g.elem_order(x), 4);
        assert_eq!(g.elem_order(y), 2);
        assert!(g.commute(x, y));
    }

    #[test]
    fn invalid_specs() {
        for s in [
            "C0",
            "D7",
            "Q12",
            "PSL2(6)",
            "ScalarSemidirect(5,2,5)",
            "ScalarSemidirect(4,2,3)",
            "ScalarSemidirect(5,1,4,5)",
            "ScalarSemidirect(5,1,2,3)",
            "CpByCqm(5,3,1)",
        ] {
            let spec = s.parse::<GroupSpec>();
            assert!(
                spec.is_err() || build(&spec.unwrap()).is_err(),
                "{s} should be rejected"
            );
        }
    }
}
