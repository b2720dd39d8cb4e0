// Copyright 2026 The qlbm Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! OpenQASM 2 subset interchange.
//!
//! The supported grammar is deliberately small: the `OPENQASM 2.0;` header,
//! one `include "qelib1.inc";`, one `qreg`, and gate statements drawn from
//! {x, h, ry, rz, u1, cx, ccx, swap, cu1}. `barrier` statements are parsed and
//! discarded, `//` comments are skipped. Angles are emitted with 17 significant
//! digits so that emit/parse round-trips are bit-faithful.

use crate::error::{Error, Result};
use crate::sim::{Gate, GateInstruction};

use super::Kernel;

/// Render a kernel as OpenQASM 2 text.
///
/// Fails with [`Error::UnsupportedQasmGate`] if the kernel contains a gate
/// without a spelling in the supported subset.
pub fn emit_qasm(kernel: &Kernel) -> Result<String> {
    let mut out = String::new();
    out.push_str("OPENQASM 2.0;\n");
    out.push_str("include \"qelib1.inc\";\n");
    out.push_str(&format!("qreg q[{}];\n", kernel.num_qubits()));
    for inst in kernel.instructions() {
        out.push_str(&statement(inst)?);
        out.push('\n');
    }
    Ok(out)
}

fn statement(inst: &GateInstruction) -> Result<String> {
    let q = inst.qubits();
    let stmt = match inst.gate() {
        Gate::X => format!("x q[{}];", q[0]),
        Gate::H => format!("h q[{}];", q[0]),
        Gate::Ry(t) => format!("ry({}) q[{}];", fmt_angle(t), q[0]),
        Gate::Rz(t) => format!("rz({}) q[{}];", fmt_angle(t), q[0]),
        Gate::Phase(t) => format!("u1({}) q[{}];", fmt_angle(t), q[0]),
        Gate::Cx => format!("cx q[{}],q[{}];", q[0], q[1]),
        Gate::Toffoli => format!("ccx q[{}],q[{}],q[{}];", q[0], q[1], q[2]),
        Gate::Swap => format!("swap q[{}],q[{}];", q[0], q[1]),
        Gate::CPhase(t) => format!("cu1({}) q[{}],q[{}];", fmt_angle(t), q[0], q[1]),
        other => return Err(Error::UnsupportedQasmGate(other.name())),
    };
    Ok(stmt)
}

/// 17 significant digits: enough to reproduce any f64 exactly on re-parse.
fn fmt_angle(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(usize),
    Real(f64),
    Str(String),
    Sym(char),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Int(v) => format!("integer `{v}`"),
            Tok::Real(v) => format!("number `{v}`"),
            Tok::Str(s) => format!("string \"{s}\""),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Eof => "end of input".to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pos {
    line: usize,
    col: usize,
}

struct Lexer<'a> {
    src: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src: src.chars().peekable(),
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.src.next()?;
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn error(&self, pos: Pos, message: impl Into<String>) -> Error {
        Error::QasmParse {
            line: pos.line,
            col: pos.col,
            message: message.into(),
        }
    }

    /// Next token plus its start position.
    fn next_token(&mut self) -> Result<(Tok, Pos)> {
        loop {
            // Skip whitespace and // comments.
            match self.src.peek() {
                Some(c) if c.is_whitespace() => {
                    self.bump();
                }
                Some('/') => {
                    let pos = Pos {
                        line: self.line,
                        col: self.col,
                    };
                    self.bump();
                    if self.src.peek() == Some(&'/') {
                        while let Some(c) = self.bump() {
                            if c == '\n' {
                                break;
                            }
                        }
                    } else {
                        return Err(self.error(pos, "unexpected character `/`"));
                    }
                }
                _ => break,
            }
        }
        let pos = Pos {
            line: self.line,
            col: self.col,
        };
        let c = match self.src.peek() {
            None => return Ok((Tok::Eof, pos)),
            Some(&c) => c,
        };
        if c.is_ascii_alphabetic() || c == '_' {
            let mut ident = String::new();
            while let Some(&c) = self.src.peek() {
                if c.is_ascii_alphanumeric() || c == '_' {
                    ident.push(c);
                    self.bump();
                } else {
                    break;
                }
            }
            return Ok((Tok::Ident(ident), pos));
        }
        if c.is_ascii_digit() || c == '.' {
            return self.lex_number(pos);
        }
        if c == '"' {
            self.bump();
            let mut s = String::new();
            loop {
                match self.bump() {
                    Some('"') => return Ok((Tok::Str(s), pos)),
                    Some('\n') | None => return Err(self.error(pos, "unterminated string literal")),
                    Some(c) => s.push(c),
                }
            }
        }
        if "[](),;-+".contains(c) {
            self.bump();
            return Ok((Tok::Sym(c), pos));
        }
        Err(self.error(pos, format!("unexpected character `{c}`")))
    }

    fn lex_number(&mut self, pos: Pos) -> Result<(Tok, Pos)> {
        let mut text = String::new();
        let mut is_real = false;
        while let Some(&c) = self.src.peek() {
            if c.is_ascii_digit() {
                text.push(c);
                self.bump();
            } else if c == '.' && !is_real {
                is_real = true;
                text.push(c);
                self.bump();
            } else if c == 'e' || c == 'E' {
                is_real = true;
                text.push(c);
                self.bump();
                if let Some(&sign @ ('+' | '-')) = self.src.peek() {
                    text.push(sign);
                    self.bump();
                }
            } else {
                break;
            }
        }
        if is_real {
            text.parse::<f64>()
                .map(|v| (Tok::Real(v), pos))
                .map_err(|_| self.error(pos, format!("malformed number `{text}`")))
        } else {
            text.parse::<usize>()
                .map(|v| (Tok::Int(v), pos))
                .map_err(|_| self.error(pos, format!("malformed integer `{text}`")))
        }
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    tok: Tok,
    pos: Pos,
    /// Position just past the previously consumed token, for "expected `;`"
    /// style errors that should point at the statement being completed.
    prev_end: Pos,
}

struct GateSpec {
    gate_ctor: fn(f64) -> Gate,
    params: usize,
    arity: usize,
}

fn gate_spec(name: &str) -> Option<GateSpec> {
    // The ctor ignores its argument for parameterless gates.
    let spec = match name {
        "x" => GateSpec {
            gate_ctor: |_| Gate::X,
            params: 0,
            arity: 1,
        },
        "h" => GateSpec {
            gate_ctor: |_| Gate::H,
            params: 0,
            arity: 1,
        },
        "ry" => GateSpec {
            gate_ctor: Gate::Ry,
            params: 1,
            arity: 1,
        },
        "rz" => GateSpec {
            gate_ctor: Gate::Rz,
            params: 1,
            arity: 1,
        },
        "u1" => GateSpec {
            gate_ctor: Gate::Phase,
            params: 1,
            arity: 1,
        },
        "cx" => GateSpec {
            gate_ctor: |_| Gate::Cx,
            params: 0,
            arity: 2,
        },
        "ccx" => GateSpec {
            gate_ctor: |_| Gate::Toffoli,
            params: 0,
            arity: 3,
        },
        "swap" => GateSpec {
            gate_ctor: |_| Gate::Swap,
            params: 0,
            arity: 2,
        },
        "cu1" => GateSpec {
            gate_ctor: Gate::CPhase,
            params: 1,
            arity: 2,
        },
        _ => return None,
    };
    Some(spec)
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Result<Self> {
        let mut lexer = Lexer::new(src);
        let (tok, pos) = lexer.next_token()?;
        Ok(Self {
            lexer,
            tok,
            pos,
            prev_end: Pos { line: 1, col: 1 },
        })
    }

    fn advance(&mut self) -> Result<Tok> {
        self.prev_end = Pos {
            line: self.lexer.line,
            col: self.lexer.col,
        };
        let (tok, pos) = self.lexer.next_token()?;
        let prev = std::mem::replace(&mut self.tok, tok);
        self.pos = pos;
        Ok(prev)
    }

    fn error_here(&self, message: impl Into<String>) -> Error {
        Error::QasmParse {
            line: self.pos.line,
            col: self.pos.col,
            message: message.into(),
        }
    }

    fn expect_sym(&mut self, sym: char) -> Result<()> {
        if self.tok == Tok::Sym(sym) {
            self.advance()?;
            Ok(())
        } else if sym == ';' {
            // Point at the end of the statement that is missing its terminator.
            Err(Error::QasmParse {
                line: self.prev_end.line,
                col: self.prev_end.col,
                message: format!("expected `;`, found {}", self.tok.describe()),
            })
        } else {
            Err(self.error_here(format!("expected `{sym}`, found {}", self.tok.describe())))
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<()> {
        match &self.tok {
            Tok::Ident(s) if s == kw => {
                self.advance()?;
                Ok(())
            }
            other => Err(self.error_here(format!("expected `{kw}`, found {}", other.describe()))),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<usize> {
        match self.tok {
            Tok::Int(v) => {
                self.advance()?;
                Ok(v)
            }
            ref other => {
                Err(self.error_here(format!("expected {what}, found {}", other.describe())))
            }
        }
    }

    fn parse_header(&mut self) -> Result<()> {
        self.expect_keyword("OPENQASM")?;
        let version_ok = matches!(self.tok, Tok::Real(v) if v == 2.0);
        if !version_ok {
            return Err(self.error_here(format!(
                "expected version `2.0`, found {}",
                self.tok.describe()
            )));
        }
        self.advance()?;
        self.expect_sym(';')?;

        self.expect_keyword("include")?;
        match &self.tok {
            Tok::Str(s) if s == "qelib1.inc" => {
                self.advance()?;
            }
            other => {
                return Err(self.error_here(format!(
                    "expected \"qelib1.inc\", found {}",
                    other.describe()
                )))
            }
        }
        self.expect_sym(';')
    }

    fn parse_qreg(&mut self) -> Result<(String, usize)> {
        self.expect_keyword("qreg")?;
        let name = match &self.tok {
            Tok::Ident(_) => match self.advance()? {
                Tok::Ident(s) => s,
                _ => unreachable!(),
            },
            other => {
                return Err(self.error_here(format!(
                    "expected register name, found {}",
                    other.describe()
                )));
            }
        };
        self.expect_sym('[')?;
        let size = self.expect_int("register size")?;
        self.expect_sym(']')?;
        self.expect_sym(';')?;
        if size == 0 {
            return Err(self.error_here("register size must be at least 1".to_string()));
        }
        Ok((name, size))
    }

    /// `name[index]` with the declared register name and width.
    fn parse_qubit_arg(&mut self, reg: &str, size: usize) -> Result<usize> {
        let arg_pos = self.pos;
        match &self.tok {
            Tok::Ident(s) if s == reg => {
                self.advance()?;
            }
            other => {
                return Err(self.error_here(format!(
                    "expected register `{reg}`, found {}",
                    other.describe()
                )))
            }
        }
        self.expect_sym('[')?;
        let index = self.expect_int("qubit index")?;
        self.expect_sym(']')?;
        if index >= size {
            return Err(Error::QasmParse {
                line: arg_pos.line,
                col: arg_pos.col,
                message: format!("qubit index {index} out of range for qreg {reg}[{size}]"),
            });
        }
        Ok(index)
    }

    /// Signed float or integer literal.
    fn parse_angle(&mut self) -> Result<f64> {
        let negative = if self.tok == Tok::Sym('-') {
            self.advance()?;
            true
        } else {
            if self.tok == Tok::Sym('+') {
                self.advance()?;
            }
            false
        };
        let value = match self.tok {
            Tok::Real(v) => v,
            Tok::Int(v) => v as f64,
            ref other => {
                return Err(self.error_here(format!("expected angle, found {}", other.describe())))
            }
        };
        self.advance()?;
        Ok(if negative { -value } else { value })
    }

    fn skip_barrier(&mut self) -> Result<()> {
        // Operands carry no meaning here; discard up to the terminator.
        loop {
            match self.tok {
                Tok::Sym(';') => {
                    self.advance()?;
                    return Ok(());
                }
                Tok::Eof => {
                    return Err(Error::QasmParse {
                        line: self.prev_end.line,
                        col: self.prev_end.col,
                        message: "expected `;`, found end of input".to_string(),
                    })
                }
                _ => {
                    self.advance()?;
                }
            }
        }
    }

    fn parse_gate_statement(
        &mut self,
        name: String,
        name_pos: Pos,
        reg: &str,
        size: usize,
    ) -> Result<GateInstruction> {
        let spec = gate_spec(&name).ok_or(Error::QasmParse {
            line: name_pos.line,
            col: name_pos.col,
            message: format!("unknown gate `{name}`"),
        })?;

        let mut angle = 0.0;
        if spec.params == 1 {
            self.expect_sym('(')?;
            angle = self.parse_angle()?;
            self.expect_sym(')')?;
        } else if self.tok == Tok::Sym('(') {
            return Err(self.error_here(format!("gate `{name}` takes no parameters")));
        }

        let mut qubits = Vec::with_capacity(spec.arity);
        let args_pos = self.pos;
        loop {
            qubits.push(self.parse_qubit_arg(reg, size)?);
            if self.tok == Tok::Sym(',') {
                self.advance()?;
            } else {
                break;
            }
        }
        self.expect_sym(';')?;

        if qubits.len() != spec.arity {
            return Err(Error::QasmParse {
                line: args_pos.line,
                col: args_pos.col,
                message: format!(
                    "gate `{name}` takes {} qubit argument(s), got {}",
                    spec.arity,
                    qubits.len()
                ),
            });
        }
        for (i, &q) in qubits.iter().enumerate() {
            if qubits[..i].contains(&q) {
                return Err(Error::QasmParse {
                    line: args_pos.line,
                    col: args_pos.col,
                    message: format!("duplicate qubit operand q[{q}]"),
                });
            }
        }

        let gate = (spec.gate_ctor)(angle);
        Ok(GateInstruction::new(gate, &qubits).expect("operands were checked above"))
    }
}

/// Parse OpenQASM 2 subset text into a kernel named `"qasm"`.
pub fn parse_qasm(text: &str) -> Result<Kernel> {
    let mut p = Parser::new(text)?;
    p.parse_header()?;
    let (reg, size) = p.parse_qreg()?;

    let mut instructions = Vec::new();
    loop {
        let name_pos = p.pos;
        match &p.tok {
            Tok::Eof => break,
            Tok::Ident(_) => {
                let name = match p.advance()? {
                    Tok::Ident(s) => s,
                    _ => unreachable!(),
                };
                match name.as_str() {
                    "barrier" => p.skip_barrier()?,
                    "qreg" => {
                        return Err(Error::QasmParse {
                            line: name_pos.line,
                            col: name_pos.col,
                            message: "only one qreg declaration is supported".to_string(),
                        })
                    }
                    _ => instructions.push(p.parse_gate_statement(name, name_pos, &reg, size)?),
                }
            }
            other => {
                return Err(p.error_here(format!(
                    "expected a gate statement, found {}",
                    other.describe()
                )));
            }
        }
    }
    Kernel::new("qasm", size, instructions)
}
