"""Machine configuration for the simulated streaming multiprocessor."""

from __future__ import annotations

from dataclasses import dataclass

MAX_TOTAL_REGS = 32768  # 32K registers across all SPs
DP_CLOCK_HZ = 771e6     # 4R-1W shared memory keeps the core at full speed
QP_CLOCK_HZ = 600e6     # quad-port memory mode costs clock rate

# CLI/service variant names -> (memory variant, complex unit enabled)
VARIANT_NAMES = {
    "dp": ("DP", False),
    "qp": ("QP", False),
    "dp-vm": ("VM", False),
    "dp-complex": ("DP", True),
    "dp-vm-complex": ("VM", True),
    "qp-complex": ("QP", True),
}


@dataclass(frozen=True)
class MachineConfig:
    threads: int
    regs_per_thread: int
    variant: str = "DP"          # DP | QP | VM
    complex_enabled: bool = False
    num_sps: int = 16
    shared_mem_bytes: int = 65536
    pipeline_depth: int = 8
    strict_banking: bool = True
    clock_hz: float = 0.0        # 0 selects the variant default

    def __post_init__(self):
        if self.variant not in ("DP", "QP", "VM"):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.threads <= 0 or self.threads % self.num_sps != 0:
            raise ValueError(f"threads ({self.threads}) must be a positive multiple of {self.num_sps}")
        if self.threads * self.regs_per_thread > MAX_TOTAL_REGS:
            raise ValueError(
                f"{self.threads} threads x {self.regs_per_thread} regs exceeds {MAX_TOTAL_REGS} total registers"
            )
        if self.clock_hz == 0.0:
            object.__setattr__(self, "clock_hz", QP_CLOCK_HZ if self.variant == "QP" else DP_CLOCK_HZ)

    @property
    def wavefront_depth(self) -> int:
        return self.threads // self.num_sps

    @property
    def write_ports(self) -> int:
        return 2 if self.variant == "QP" else 1

    @property
    def shared_mem_words(self) -> int:
        return self.shared_mem_bytes // 4

    @property
    def variant_name(self) -> str:
        """CLI-style name, e.g. dp-vm-complex."""
        for name, (var, cplx) in VARIANT_NAMES.items():
            if (var, cplx) == (self.variant, self.complex_enabled):
                return name
        raise ValueError(f"no name for variant={self.variant} complex={self.complex_enabled}")


def config_for_variant(name: str, threads: int, regs_per_thread: int,
                       strict_banking: bool = True) -> MachineConfig:
    try:
        variant, complex_enabled = VARIANT_NAMES[name]
    except KeyError:
        raise ValueError(f"unknown variant name {name!r}; expected one of {sorted(VARIANT_NAMES)}") from None
    return MachineConfig(threads=threads, regs_per_thread=regs_per_thread,
                         variant=variant, complex_enabled=complex_enabled,
                         strict_banking=strict_banking)
