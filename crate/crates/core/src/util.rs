//! Small integer helpers.

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Distinct prime divisors, ascending.
pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    while n > 0 && n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

/// If `n = p^k` with `k ≥ 1`, returns `p`.
pub fn prime_power_base(n: usize) -> Option<usize> {
    match prime_factors(n).as_slice() {
        [p] => Some(*p),
        _ => None,
    }
}

pub fn is_squarefree(n: usize) -> bool {
    prime_factors(n).into_iter().all(|p| n % (p * p) != 0)
}

pub fn pow_mod(mut base: usize, mut exp: usize, m: usize) -> usize {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Smallest positive primitive root modulo the prime `p`.
pub fn smallest_primitive_root(p: usize) -> usize {
    if p == 2 {
        return 1;
    }
    let factors = prime_factors(p - 1);
    (2..p)
        .find(|&r| factors.iter().all(|&q| pow_mod(r, (p - 1) / q, p) != 1))
        .expect("every prime has a primitive root")
}
