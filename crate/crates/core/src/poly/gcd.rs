use super::mpoly::MPoly;
use super::var::Var;

/// Greatest common divisor over `Q`, normalized to have coprime integer
/// coefficients and a positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    if a.div_exact(b).is_some() {
        return normalize(b);
    }
    if b.div_exact(a).is_some() {
        return normalize(a);
    }
    normalize(&gcd_rec(a, b))
}

fn normalize(p: &MPoly) -> MPoly {
    p.integer_primitive().1
}

fn gcd_rec(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let mut vars = a.vars();
    vars.extend(b.vars());
    let x = *vars.iter().next().unwrap();
    let da = a.degree_in(x);
    let db = b.degree_in(x);
    if da == 0 && db == 0 {
        unreachable!("variable selected from the union must occur");
    }
    if da == 0 {
        return gcd_rec(a, &content(b, x));
    }
    if db == 0 {
        return gcd_rec(&content(a, x), b);
    }
    let ca = content(a, x);
    let cb = content(b, x);
    let c = gcd_rec(&ca, &cb);
    let mut p = primitive_part(a, &ca);
    let mut q = primitive_part(b, &cb);
    if p.degree_in(x) < q.degree_in(x) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = pseudo_rem(&p, &q, x);
        p = q;
        if r.is_zero() {
            q = MPoly::zero();
        } else if r.degree_in(x) == 0 {
            p = MPoly::one();
            q = MPoly::zero();
        } else {
            let cr = content(&r, x);
            q = primitive_part(&r, &cr);
        }
    }
    let g = if p.degree_in(x) == 0 { MPoly::one() } else { p };
    &normalize(&c) * &normalize(&g)
}

/// Gcd of the coefficients of `p` viewed in `R[x]`.
fn content(p: &MPoly, x: Var) -> MPoly {
    let mut g = MPoly::zero();
    for c in p.as_univariate(x).into_iter().filter(|c| !c.is_zero()) {
        g = if g.is_zero() {
            normalize(&c)
        } else {
            normalize(&gcd_rec(&g, &c))
        };
        if g.is_constant() {
            return MPoly::one();
        }
    }
    g
}

fn primitive_part(p: &MPoly, cont: &MPoly) -> MPoly {
    if cont.is_constant() {
        return normalize(p);
    }
    normalize(&p.div_exact(cont).expect("content divides its polynomial"))
}

/// Pseudo-remainder of `a` by `b` in `R[x]`.
fn pseudo_rem(a: &MPoly, b: &MPoly, x: Var) -> MPoly {
    let bc = b.as_univariate(x);
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    let mut r = a.as_univariate(x);
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        let shift = dr - db;
        for (i, c) in bc.iter().enumerate() {
            let t = c * &lr;
            r[i + shift] -= &t;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
        while r.last().is_some_and(MPoly::is_zero) {
            r.pop();
        }
    }
    MPoly::from_univariate(&r, x)
}

/// Least common multiple with the same normalization as [`gcd`].
pub fn lcm(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() || b.is_zero() {
        return MPoly::zero();
    }
    let g = gcd(a, b);
    normalize(&(&a.div_exact(&g).unwrap() * b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MPoly {
        s.parse().unwrap()
    }

    #[test]
    fn univariate() {
        assert_eq!(gcd(&p("q^2 - 1"), &p("q^2 + 2*q + 1")), p("q + 1"));
        assert_eq!(gcd(&p("q^2 + 1"), &p("q - 1")), MPoly::one());
    }

    #[test]
    fn bivariate_common_factor() {
        let f = p("q*t - 1");
        let a = &f * &p("q + t^2");
        let b = &f * &p("q^2 - t");
        assert_eq!(gcd(&a, &b), f);
    }

    #[test]
    fn normalized_sign_and_content() {
        assert_eq!(gcd(&p("-2*q + 2*t"), &p("4*q^2 - 4*t^2")), p("q - t"));
        assert_eq!(gcd(&MPoly::zero(), &p("-3*q")), p("q"));
    }

    #[test]
    fn trivariate() {
        let f = p("q*t - u1^2 + 1");
        let g = p("q - t");
        let a = &(&f * &g) * &p("u1 + q");
        let b = &(&f * &g) * &p("t*u1 - 3");
        assert_eq!(gcd(&a, &b), normalize(&(&f * &g)));
    }

    #[test]
    fn least_common_multiple() {
        assert_eq!(lcm(&p("q^2 - 1"), &p("q - 1")), p("q^2 - 1"));
    }
}
