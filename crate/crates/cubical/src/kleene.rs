//! A minimal partial-computability kernel: a three-instruction register
//! machine with a bit-exact program and trace encoding, the decidable
//! halting-certificate predicate T with its output projector U, partial
//! functions with oracle-decided domains, and instance-level checks that
//! a program realizes a given partial function on a finite range.
//!
//! # Encoding
//!
//! Instruction codes: `0` is `halt`; `3r + 1` is `inc r`; `3·pair(r,t) + 2`
//! is `decjz r t` with the Cantor pairing `pair(r,t) = (r+t)(r+t+1)/2 + t`.
//! Any other code (a positive multiple of 3) is invalid.
//!
//! Lists of naturals are encoded as a base-4 digit stream, least
//! significant digit first: each element contributes its binary digits
//! (LSB first, no trailing zeros) as digits `0`/`1`, followed by the
//! separator digit `2`. The stream read back from the number is
//! unambiguous because it always ends in a separator. Digit `3` never
//! occurs in a valid encoding. This keeps trace sizes linear in the
//! number of snapshots rather than exponential.
//!
//! A program code is the encoded list of its instruction codes; invalid
//! codes decode to the canonical diverging program `decjz 1 0`. A trace is
//! `encode_list([x, t, u, encode_list(snapshots)])` where each snapshot is
//! `encode_list([pc, r0, ..., rk])` for `k` the highest register index the
//! program mentions.

use std::fmt;
use std::str::FromStr;

use num::{BigUint, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KleeneError {
    #[error("line {line}: unknown instruction `{text}`")]
    Parse { line: usize, text: String },
    #[error("jump target {target} out of range for program of length {len}")]
    BadTarget { target: usize, len: usize },
}

/// One register-machine instruction. Registers are unbounded naturals;
/// input and output live in register 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instruction {
    /// Increment a register.
    Inc(usize),
    /// If the register is zero jump to the target, else decrement it.
    DecJz(usize, usize),
    /// Stop; falling off the end of the program also stops.
    Halt,
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::Inc(r) => write!(f, "inc {r}"),
            Instruction::DecJz(r, t) => write!(f, "decjz {r} {t}"),
            Instruction::Halt => write!(f, "halt"),
        }
    }
}

/// A register-machine program in the assembly text format: one
/// instruction per line, lower-case mnemonics, decimal operands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    instructions: Vec<Instruction>,
}

impl Program {
    pub fn new(instructions: Vec<Instruction>) -> Program {
        Program { instructions }
    }

    /// The canonical diverging program: register 1 stays zero, so the
    /// jump-if-zero at address 0 loops forever.
    pub fn diverging() -> Program {
        Program::new(vec![Instruction::DecJz(1, 0)])
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    /// Highest register index mentioned, or 0 for the empty program.
    pub fn max_register(&self) -> usize {
        self.instructions
            .iter()
            .map(|i| match i {
                Instruction::Inc(r) => *r,
                Instruction::DecJz(r, _) => *r,
                Instruction::Halt => 0,
            })
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.instructions {
            writeln!(f, "{i}")?;
        }
        Ok(())
    }
}

impl FromStr for Program {
    type Err = KleeneError;

    fn from_str(s: &str) -> Result<Program, KleeneError> {
        let mut instructions = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = || KleeneError::Parse {
                line: idx + 1,
                text: raw.trim().to_string(),
            };
            let mut parts = line.split_whitespace();
            let ins = match parts.next() {
                Some("halt") => Instruction::Halt,
                Some("inc") => {
                    let r = parts.next().and_then(|p| p.parse().ok()).ok_or_else(parse_err)?;
                    Instruction::Inc(r)
                }
                Some("decjz") => {
                    let r = parts.next().and_then(|p| p.parse().ok()).ok_or_else(parse_err)?;
                    let t = parts.next().and_then(|p| p.parse().ok()).ok_or_else(parse_err)?;
                    Instruction::DecJz(r, t)
                }
                _ => return Err(parse_err()),
            };
            if parts.next().is_some() {
                return Err(parse_err());
            }
            instructions.push(ins);
        }
        Ok(Program::new(instructions))
    }
}

/// Cantor pairing of two naturals.
pub fn pair(r: u64, t: u64) -> u64 {
    (r + t) * (r + t + 1) / 2 + t
}

/// Inverse of [`pair`]; total.
pub fn unpair(z: u64) -> (u64, u64) {
    let mut w = 0u64;
    while (w + 1) * (w + 2) / 2 <= z {
        w += 1;
    }
    let t = z - w * (w + 1) / 2;
    (w - t, t)
}

fn instruction_code(i: &Instruction) -> u64 {
    match i {
        Instruction::Halt => 0,
        Instruction::Inc(r) => 3 * (*r as u64) + 1,
        Instruction::DecJz(r, t) => 3 * pair(*r as u64, *t as u64) + 2,
    }
}

fn instruction_decode(code: &BigUint) -> Option<Instruction> {
    let code = u64::try_from(code).ok()?;
    if code == 0 {
        return Some(Instruction::Halt);
    }
    match code % 3 {
        1 => Some(Instruction::Inc(((code - 1) / 3) as usize)),
        2 => {
            let (r, t) = unpair((code - 2) / 3);
            Some(Instruction::DecJz(r as usize, t as usize))
        }
        _ => None,
    }
}

/// Encodes a list of naturals as a base-4 digit stream (see module docs).
pub fn encode_list(items: &[BigUint]) -> BigUint {
    let four = BigUint::from(4u8);
    let mut acc = BigUint::zero();
    let mut shift = BigUint::from(1u8);
    for item in items {
        let mut rest = item.clone();
        let two = BigUint::from(2u8);
        while !rest.is_zero() {
            let bit = &rest % &two;
            acc += &bit * &shift;
            shift *= &four;
            rest /= &two;
        }
        // separator digit 2
        acc += &two * &shift;
        shift *= &four;
    }
    acc
}

/// Decodes a base-4 digit stream back to a list; `None` on any invalid
/// digit or a dangling element without its separator.
pub fn decode_list(z: &BigUint) -> Option<Vec<BigUint>> {
    let four = BigUint::from(4u8);
    let two = BigUint::from(2u8);
    let mut rest = z.clone();
    let mut items = Vec::new();
    let mut current = BigUint::zero();
    let mut bit_shift = BigUint::from(1u8);
    let mut open = false;
    while !rest.is_zero() {
        let digit = &rest % &four;
        rest /= &four;
        if digit == two {
            items.push(current);
            current = BigUint::zero();
            bit_shift = BigUint::from(1u8);
            open = false;
        } else if digit < two {
            current += &digit * &bit_shift;
            bit_shift *= &two;
            open = true;
        } else {
            return None; // digit 3 never occurs
        }
    }
    if open {
        return None; // trailing bits with no separator
    }
    Some(items)
}

/// A program index: the encoded instruction list. Decoding is total —
/// anything that is not a valid encoding denotes the diverging program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MachineCode(pub BigUint);

impl MachineCode {
    pub fn encode(p: &Program) -> MachineCode {
        let codes: Vec<BigUint> = p
            .instructions
            .iter()
            .map(|i| BigUint::from(instruction_code(i)))
            .collect();
        MachineCode(encode_list(&codes))
    }

    pub fn decode(&self) -> Program {
        let Some(codes) = decode_list(&self.0) else {
            return Program::diverging();
        };
        let mut instructions = Vec::with_capacity(codes.len());
        for code in &codes {
            match instruction_decode(code) {
                Some(i) => instructions.push(i),
                None => return Program::diverging(),
            }
        }
        Program::new(instructions)
    }
}

/// Result of running a program under a fuel bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunResult {
    Halted(u64),
    Timeout,
}

/// One machine state: program counter plus all registers `0..=max_register`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Snapshot {
    pub pc: usize,
    pub registers: Vec<u64>,
}

fn step(p: &Program, state: &mut Snapshot) -> bool {
    match p.instructions.get(state.pc) {
        None | Some(Instruction::Halt) => false,
        Some(Instruction::Inc(r)) => {
            state.registers[*r] += 1;
            state.pc += 1;
            true
        }
        Some(Instruction::DecJz(r, t)) => {
            if state.registers[*r] == 0 {
                state.pc = *t;
            } else {
                state.registers[*r] -= 1;
                state.pc += 1;
            }
            true
        }
    }
}

/// Deterministic small-step execution with input and output in register 0.
pub fn run(p: &Program, x: u64, fuel: usize) -> RunResult {
    let mut state = Snapshot {
        pc: 0,
        registers: vec![0; p.max_register() + 1],
    };
    state.registers[0] = x;
    for _ in 0..=fuel {
        if !step(p, &mut state) {
            return RunResult::Halted(state.registers[0]);
        }
    }
    RunResult::Timeout
}

/// Like [`run`], but also returns the full snapshot sequence (initial
/// state included) when the program halts.
pub fn run_trace(p: &Program, x: u64, fuel: usize) -> Option<(u64, Vec<Snapshot>)> {
    let mut state = Snapshot {
        pc: 0,
        registers: vec![0; p.max_register() + 1],
    };
    state.registers[0] = x;
    let mut snaps = vec![state.clone()];
    for _ in 0..=fuel {
        if !step(p, &mut state) {
            return Some((state.registers[0], snaps));
        }
        snaps.push(state.clone());
    }
    None
}

fn snapshot_code(s: &Snapshot) -> BigUint {
    let mut items = vec![BigUint::from(s.pc)];
    items.extend(s.registers.iter().map(|&r| BigUint::from(r)));
    encode_list(&items)
}

/// Emits the halting certificate for `p` on `x`, if it halts within fuel.
pub fn emit_trace(p: &Program, x: u64, fuel: usize) -> Option<BigUint> {
    let (u, snaps) = run_trace(p, x, fuel)?;
    let snap_codes: Vec<BigUint> = snaps.iter().map(snapshot_code).collect();
    let t = snaps.len() as u64 - 1;
    Some(encode_list(&[
        BigUint::from(x),
        BigUint::from(t),
        BigUint::from(u),
        encode_list(&snap_codes),
    ]))
}

/// The halting-certificate predicate: `z` codes a computation of the
/// program `e` on input `x`. Decided by replaying the machine for the
/// claimed number of steps and comparing every snapshot. Total.
pub fn kleene_t(e: &MachineCode, x: u64, z: &BigUint) -> bool {
    let Some(parts) = decode_list(z) else {
        return false;
    };
    let [zx, zt, zu, zsnaps] = parts.as_slice() else {
        return false;
    };
    if *zx != BigUint::from(x) {
        return false;
    }
    let Ok(t) = u64::try_from(zt) else {
        return false;
    };
    let Some(snap_codes) = decode_list(zsnaps) else {
        return false;
    };
    if snap_codes.len() as u64 != t + 1 {
        return false;
    }
    let p = e.decode();
    let mut state = Snapshot {
        pc: 0,
        registers: vec![0; p.max_register() + 1],
    };
    state.registers[0] = x;
    for (i, code) in snap_codes.iter().enumerate() {
        if *code != snapshot_code(&state) {
            return false;
        }
        let advanced = step(&p, &mut state);
        let is_last = i + 1 == snap_codes.len();
        if is_last {
            // the machine must halt here with the claimed output
            if advanced || BigUint::from(state.registers[0]) != *zu {
                return false;
            }
        } else if !advanced {
            return false; // halted earlier than claimed
        }
    }
    true
}

/// Projects the output from a halting certificate; 0 for malformed input.
pub fn kleene_u(z: &BigUint) -> BigUint {
    decode_list(z)
        .and_then(|parts| parts.get(2).cloned())
        .unwrap_or_else(BigUint::zero)
}

/// A partial function on naturals with its domain given as a decision
/// oracle over the finite test range — the desk-scale stand-in for a
/// double-negation-stable domain predicate, which at this scale has no
/// observable content beyond the absence of a third truth value.
pub struct PartialFn {
    domain: Box<dyn Fn(u64) -> bool + Send + Sync>,
    value: Box<dyn Fn(u64) -> u64 + Send + Sync>,
}

impl PartialFn {
    pub fn new(
        domain: impl Fn(u64) -> bool + Send + Sync + 'static,
        value: impl Fn(u64) -> u64 + Send + Sync + 'static,
    ) -> PartialFn {
        PartialFn {
            domain: Box::new(domain),
            value: Box::new(value),
        }
    }

    pub fn total(value: impl Fn(u64) -> u64 + Send + Sync + 'static) -> PartialFn {
        PartialFn::new(|_| true, value)
    }

    pub fn accepts(&self, x: u64) -> bool {
        (self.domain)(x)
    }

    pub fn value(&self, x: u64) -> u64 {
        (self.value)(x)
    }
}

impl fmt::Debug for PartialFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PartialFn").finish_non_exhaustive()
    }
}

/// Per-point outcome of an agreement check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointOutcome {
    /// Outside the claimed domain: unconstrained.
    Skipped,
    /// Certificate found and the output matches.
    Pass { z_bits: usize },
    /// The program halted with the wrong output.
    Fail { got: u64, want: u64 },
    /// Fuel exhausted before the program halted.
    Inconclusive,
}

/// Verdict of [`ect_check`] over the whole range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EctStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug)]
pub struct EctReport {
    pub status: EctStatus,
    pub points: Vec<(u64, PointOutcome)>,
}

/// Checks, point by point over a finite range, that the program indexed
/// by `e` agrees with `f` on the accepted points: for each such `x` it
/// must produce a certificate `z` with `kleene_t(e, x, z)` and
/// `kleene_u(z) = f(x)`. Points outside the domain are unconstrained, so
/// a program with a strictly larger domain still passes. Wrong outputs
/// give `Fail`; fuel exhaustion gives `Inconclusive`, never `Fail`.
pub fn ect_check(f: &PartialFn, e: &MachineCode, range: &[u64], fuel: usize) -> EctReport {
    let p = e.decode();
    let mut points = Vec::with_capacity(range.len());
    let mut status = EctStatus::Pass;
    for &x in range {
        if !f.accepts(x) {
            points.push((x, PointOutcome::Skipped));
            continue;
        }
        let outcome = match emit_trace(&p, x, fuel) {
            None => PointOutcome::Inconclusive,
            Some(z) => {
                debug_assert!(kleene_t(e, x, &z));
                let got = u64::try_from(&kleene_u(&z)).expect("outputs fit in u64 at desk scale");
                let want = f.value(x);
                if got == want {
                    PointOutcome::Pass { z_bits: z.bits() as usize }
                } else {
                    PointOutcome::Fail { got, want }
                }
            }
        };
        match &outcome {
            PointOutcome::Fail { .. } => status = EctStatus::Fail,
            PointOutcome::Inconclusive if status == EctStatus::Pass => {
                status = EctStatus::Inconclusive
            }
            _ => {}
        }
        points.push((x, outcome));
    }
    EctReport { status, points }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity() -> Program {
        Program::new(vec![Instruction::Halt])
    }

    fn successor() -> Program {
        Program::new(vec![Instruction::Inc(0), Instruction::Halt])
    }

    /// Adds a constant by chaining increments.
    fn add_k(k: usize) -> Program {
        let mut ins = vec![Instruction::Inc(0); k];
        ins.push(Instruction::Halt);
        Program::new(ins)
    }

    /// Doubles register 0 via a scratch register: move r0 to r1, then add
    /// two back per unit.
    fn doubler() -> Program {
        "decjz 0 4\ninc 1\ninc 1\ndecjz 2 0\ndecjz 1 7\ninc 0\ndecjz 2 4\nhalt"
            .parse()
            .unwrap()
    }

    #[test]
    fn run_examples() {
        assert_eq!(run(&identity(), 5, 1000), RunResult::Halted(5));
        assert_eq!(run(&successor(), 7, 1000), RunResult::Halted(8));
        assert_eq!(run(&Program::diverging(), 3, 1000), RunResult::Timeout);
        for x in 0..10 {
            assert_eq!(run(&doubler(), x, 100_000), RunResult::Halted(2 * x));
        }
    }

    #[test]
    fn assembly_roundtrip() {
        let p = doubler();
        let text = p.to_string();
        assert_eq!(text.parse::<Program>().unwrap(), p);
        let err = "inc".parse::<Program>().unwrap_err();
        assert_eq!(
            err,
            KleeneError::Parse {
                line: 1,
                text: "inc".to_string()
            }
        );
    }

    #[test]
    fn pairing_roundtrip() {
        for r in 0..30 {
            for t in 0..30 {
                assert_eq!(unpair(pair(r, t)), (r, t));
            }
        }
    }

    #[test]
    fn list_encoding_roundtrip() {
        let cases: Vec<Vec<u64>> = vec![
            vec![],
            vec![0],
            vec![0, 0, 0],
            vec![1, 2, 3],
            vec![u64::MAX, 0, 12345],
        ];
        for case in cases {
            let items: Vec<BigUint> = case.iter().map(|&x| BigUint::from(x)).collect();
            assert_eq!(decode_list(&encode_list(&items)), Some(items));
        }
        // a dangling bit without separator is invalid
        assert_eq!(decode_list(&BigUint::from(1u8)), None);
        // digit 3 is invalid
        assert_eq!(decode_list(&BigUint::from(3u8)), None);
    }

    #[test]
    fn machine_code_roundtrip_and_invalid_codes() {
        for p in [identity(), successor(), doubler(), Program::diverging()] {
            assert_eq!(MachineCode::encode(&p).decode(), p);
        }
        // instruction code 3 is a positive multiple of 3: invalid
        let bogus = MachineCode(encode_list(&[BigUint::from(3u8)]));
        assert_eq!(bogus.decode(), Program::diverging());
        // a non-list number is also the diverging program
        assert_eq!(MachineCode(BigUint::from(1u8)).decode(), Program::diverging());
    }

    #[test]
    fn trace_encoding_is_size_linear() {
        // ~400 steps produce a certificate of modest size, evidence that
        // the list encoding does not nest pairings exponentially
        let p = add_k(400);
        let z = emit_trace(&p, 0, 100_000).unwrap();
        assert!(z.bits() < 2_000_000);
    }

    #[test]
    fn t_sound_and_complete_on_halts() {
        let programs = vec![identity(), successor(), doubler(), add_k(3)];
        for p in &programs {
            let e = MachineCode::encode(p);
            for x in 0..10 {
                let z = emit_trace(p, x, 100_000).unwrap();
                assert!(kleene_t(&e, x, &z));
                let RunResult::Halted(u) = run(p, x, 100_000) else {
                    panic!("expected halt");
                };
                assert_eq!(kleene_u(&z), BigUint::from(u));
                // wrong input is rejected
                assert!(!kleene_t(&e, x + 1, &z));
                // corrupting the certificate is detected
                let corrupted = &z + BigUint::from(4u8);
                assert!(!kleene_t(&e, x, &corrupted));
            }
        }
    }

    #[test]
    fn t_accepts_at_most_one_emitted_trace() {
        let p = doubler();
        let e = MachineCode::encode(&p);
        let traces: Vec<BigUint> = (0..6).map(|x| emit_trace(&p, x, 100_000).unwrap()).collect();
        for x in 0..6u64 {
            let accepted = traces
                .iter()
                .filter(|z| kleene_t(&e, x, z))
                .count();
            assert_eq!(accepted, 1);
        }
    }

    #[test]
    fn ect_check_examples() {
        let range: Vec<u64> = (0..10).collect();
        let id_code = MachineCode::encode(&identity());
        let succ_code = MachineCode::encode(&successor());
        // total identity vs identity program
        let r = ect_check(&PartialFn::total(|x| x), &id_code, &range, 100_000);
        assert_eq!(r.status, EctStatus::Pass);
        // successor on even numbers only: the program's larger domain is fine
        let evens = PartialFn::new(|x| x % 2 == 0, |x| x + 1);
        let r = ect_check(&evens, &succ_code, &range, 100_000);
        assert_eq!(r.status, EctStatus::Pass);
        assert_eq!(r.points[1].1, PointOutcome::Skipped);
        // identity vs successor program fails at x = 0
        let r = ect_check(&PartialFn::total(|x| x), &succ_code, &range, 100_000);
        assert_eq!(r.status, EctStatus::Fail);
        assert_eq!(r.points[0].1, PointOutcome::Fail { got: 1, want: 0 });
        // diverging program is inconclusive, not failing
        let div = MachineCode::encode(&Program::diverging());
        let r = ect_check(&PartialFn::total(|x| x), &div, &range, 1000);
        assert_eq!(r.status, EctStatus::Inconclusive);
    }

    #[test]
    fn ect_check_monotone_in_fuel() {
        // a slow program: doubling needs more fuel for larger inputs
        let p = doubler();
        let e = MachineCode::encode(&p);
        let f = PartialFn::total(|x| 2 * x);
        let range: Vec<u64> = (0..10).collect();
        let starved = ect_check(&f, &e, &range, 10);
        let fed = ect_check(&f, &e, &range, 100_000);
        assert_eq!(fed.status, EctStatus::Pass);
        assert_ne!(starved.status, EctStatus::Fail);
    }
}
