"""Instruction set, text assembler/disassembler and static program validation.

The machine is a 16-SP SIMT streaming multiprocessor. One instruction stream
drives all threads in lockstep; register operands are per-thread. Memory
operands take a base register plus an optional literal word offset, which is
how the FFT programs address strided data without burning integer ops.

Text format: one instruction per line, `Rn` registers, `--` starts a comment,
`label:` defines a branch target, immediates are decimal or 0x-prefixed.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field


class Opcode(enum.Enum):
    # integer
    IADD = "IADD"
    ISUB = "ISUB"
    IXOR = "IXOR"
    ISHL = "ISHL"
    ISHR = "ISHR"
    IAND = "IAND"
    IOR = "IOR"
    MOV = "MOV"
    SETI = "SETI"
    # floating point (FP32)
    FADD = "FADD"
    FSUB = "FSUB"
    FMUL = "FMUL"
    # complex / coefficient cache
    LOD_COEFF = "LOD_COEFF"
    MUL_REAL = "MUL_REAL"
    MUL_IMAG = "MUL_IMAG"
    COEFF_EN = "COEFF_EN"
    COEFF_DIS = "COEFF_DIS"
    # shared memory
    LOD = "LOD"
    SAVE = "SAVE"
    SAVE_BANK = "SAVE_BANK"
    # control
    BRNZ = "BRNZ"
    NOP = "NOP"
    HALT = "HALT"


INT_OPS = {Opcode.IADD, Opcode.ISUB, Opcode.IXOR, Opcode.ISHL, Opcode.ISHR,
           Opcode.IAND, Opcode.IOR, Opcode.MOV}
FP_OPS = {Opcode.FADD, Opcode.FSUB, Opcode.FMUL}
COMPLEX_OPS = {Opcode.LOD_COEFF, Opcode.MUL_REAL, Opcode.MUL_IMAG}
COMPLEX_FEATURE_OPS = COMPLEX_OPS | {Opcode.COEFF_EN, Opcode.COEFF_DIS}
MEM_OPS = {Opcode.LOD, Opcode.SAVE, Opcode.SAVE_BANK}

# operand shape per opcode: d=dest reg, a/b=src regs, i=immediate, o=optional offset
_SHAPE = {
    **{op: "dab" for op in (INT_OPS - {Opcode.MOV}) | FP_OPS | {Opcode.MUL_REAL, Opcode.MUL_IMAG}},
    Opcode.MOV: "da",
    Opcode.SETI: "di",
    Opcode.LOD_COEFF: "ab",
    Opcode.COEFF_EN: "",
    Opcode.COEFF_DIS: "",
    Opcode.LOD: "dao",
    Opcode.SAVE: "abo",       # SAVE Rsrc, Rbase[, off]
    Opcode.SAVE_BANK: "abo",
    Opcode.BRNZ: "ai",        # BRNZ Rcond, label|index
    Opcode.NOP: "",
    Opcode.HALT: "",
}

_MASK32 = 0xFFFFFFFF


@dataclass(frozen=True)
class Instruction:
    opcode: Opcode
    dest: int | None = None
    src1: int | None = None
    src2: int | None = None
    imm: int | None = None

    def reads(self) -> tuple[int, ...]:
        """Register indices this instruction reads."""
        return tuple(r for r in (self.src1, self.src2) if r is not None)

    def writes(self) -> int | None:
        return self.dest


@dataclass
class ProgramMetadata:
    needs_vm: bool = False
    needs_complex: bool = False
    required_regs: int = 0
    required_threads: int = 0


@dataclass
class Program:
    instructions: list[Instruction] = field(default_factory=list)
    labels: dict[str, int] = field(default_factory=dict)
    metadata: ProgramMetadata = field(default_factory=ProgramMetadata)

    def __len__(self) -> int:
        return len(self.instructions)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return self.instructions == other.instructions and self.labels == other.labels


class AsmError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_LABEL_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*):$")
_REG_RE = re.compile(r"^R(\d+)$", re.IGNORECASE)


def _parse_reg(tok: str, line: int) -> int:
    m = _REG_RE.match(tok)
    if not m:
        raise AsmError(f"malformed register operand {tok!r}", line)
    return int(m.group(1))


def _parse_imm(tok: str, line: int) -> int:
    try:
        val = int(tok, 0)
    except ValueError:
        raise AsmError(f"malformed immediate {tok!r}", line) from None
    if not (-(1 << 31) <= val <= _MASK32):
        raise AsmError(f"immediate {tok!r} does not fit in 32 bits", line)
    return val & _MASK32


def _infer_metadata(instructions: list[Instruction]) -> ProgramMetadata:
    meta = ProgramMetadata()
    max_reg = -1
    for ins in instructions:
        if ins.opcode is Opcode.SAVE_BANK:
            meta.needs_vm = True
        if ins.opcode in COMPLEX_FEATURE_OPS:
            meta.needs_complex = True
        for r in (ins.dest, ins.src1, ins.src2):
            if r is not None:
                max_reg = max(max_reg, r)
    meta.required_regs = max_reg + 1
    return meta


def assemble(source: str) -> Program:
    """Assemble text into a Program, resolving labels and inferring metadata."""
    instructions: list[Instruction] = []
    labels: dict[str, int] = {}
    pending: list[tuple[int, str, int]] = []  # (instruction idx, label, line no)

    for lineno, raw in enumerate(source.splitlines(), start=1):
        text = raw.split("--", 1)[0].strip().rstrip(";").strip()
        if not text:
            continue
        m = _LABEL_RE.match(text)
        if m:
            name = m.group(1)
            if name in labels:
                raise AsmError(f"duplicate label {name!r}", lineno)
            labels[name] = len(instructions)
            continue
        parts = text.split(None, 1)
        mnemonic = parts[0].upper()
        try:
            opcode = Opcode(mnemonic)
        except ValueError:
            raise AsmError(f"unknown mnemonic {mnemonic!r}", lineno) from None
        operands = [t.strip() for t in parts[1].split(",")] if len(parts) > 1 else []
        shape = _SHAPE[opcode]
        want = len(shape.rstrip("o"))
        if not (want <= len(operands) <= len(shape)):
            raise AsmError(f"{mnemonic} expects {want} operand(s), got {len(operands)}", lineno)

        dest = src1 = src2 = imm = None
        for spec, tok in zip(shape, operands):
            if spec == "d":
                dest = _parse_reg(tok, lineno)
            elif spec == "a":
                src1 = _parse_reg(tok, lineno)
            elif spec == "b":
                src2 = _parse_reg(tok, lineno)
            elif spec == "o":
                imm = _parse_imm(tok, lineno)
            elif spec == "i":
                if opcode is Opcode.BRNZ and not re.match(r"^[-0-9]|^0x", tok):
                    pending.append((len(instructions), tok, lineno))
                    imm = 0
                else:
                    imm = _parse_imm(tok, lineno)
        if opcode in MEM_OPS and imm is None:
            imm = 0
        instructions.append(Instruction(opcode, dest, src1, src2, imm))

    for idx, label, lineno in pending:
        if label not in labels:
            raise AsmError(f"unresolved label {label!r}", lineno)
        ins = instructions[idx]
        instructions[idx] = Instruction(ins.opcode, ins.dest, ins.src1, ins.src2, labels[label])

    return Program(instructions, labels, _infer_metadata(instructions))


def disassemble(program: Program) -> str:
    """Render a Program as text that reassembles to an identical Program."""
    by_index: dict[int, list[str]] = {}
    for name, idx in program.labels.items():
        by_index.setdefault(idx, []).append(name)
    target_names = {idx: names[0] for idx, names in by_index.items()}

    lines: list[str] = []
    for idx, ins in enumerate(program.instructions):
        for name in by_index.get(idx, ()):
            lines.append(f"{name}:")
        ops: list[str] = []
        for spec in _SHAPE[ins.opcode]:
            if spec == "d":
                ops.append(f"R{ins.dest}")
            elif spec == "a":
                ops.append(f"R{ins.src1}")
            elif spec == "b":
                ops.append(f"R{ins.src2}")
            elif spec == "o":
                if ins.imm:
                    ops.append(str(ins.imm))
            elif spec == "i":
                if ins.opcode is Opcode.BRNZ and ins.imm in target_names:
                    ops.append(target_names[ins.imm])
                else:
                    ops.append(str(ins.imm))
        lines.append(ins.opcode.value + (" " + ", ".join(ops) if ops else ""))
    # trailing labels (targets at end of program)
    for name in by_index.get(len(program.instructions), ()):
        lines.append(f"{name}:")
    return "\n".join(lines) + "\n"


def validate(program: Program, config) -> list[str]:
    """Static checks of a program against a machine configuration.

    Returns a list of violations; an empty list means the program can run on
    `config` without feature or range errors.
    """
    violations: list[str] = []
    meta = program.metadata
    if meta.needs_vm and config.variant != "VM":
        violations.append("program uses SAVE_BANK but virtual banking is unavailable on this variant")
    if meta.needs_complex and not config.complex_enabled:
        violations.append("program uses complex-unit instructions but the complex feature is disabled")
    if meta.required_regs > config.regs_per_thread:
        violations.append(
            f"program requires {meta.required_regs} registers/thread, config has {config.regs_per_thread}"
        )
    for idx, ins in enumerate(program.instructions):
        if ins.opcode is Opcode.BRNZ and not (0 <= (ins.imm or 0) <= len(program.instructions)):
            violations.append(f"instruction {idx}: branch target {ins.imm} out of range")
    if not program.instructions or program.instructions[-1].opcode is not Opcode.HALT:
        violations.append("program does not terminate with HALT")
    return violations
