"""Published profiling tables for the six machine variants, embedded as data.

These are the reference numbers the profiler diffs against. Cells the source
tables leave blank are stored as None ("missing") and are skipped by checks.
A few columns are internally inconsistent (the printed Total differs from the
sum of the printed rows, or a derived row was evidently computed against a
slightly different total); `derived_consistency` handles that by accepting a
derived value computed from either the row sum or the printed Total, and the
known-bad cells are listed in `DERIVED_EXCLUSIONS` with the reason.
"""

from __future__ import annotations

from dataclasses import dataclass

VARIANTS = ("dp", "dp-vm", "dp-complex", "dp-vm-complex", "qp", "qp-complex")

CATEGORY_ROWS = ("FP_OP", "Complex_OP", "INT_OP", "Load", "Store", "StoreVM",
                 "Immediate", "Branch", "NOP")
DERIVED_ROWS = ("Total", "Time_us", "Efficiency_pct", "Memory_pct")

CLOCK_HZ = {"dp": 771e6, "dp-vm": 771e6, "dp-complex": 771e6,
            "dp-vm-complex": 771e6, "qp": 600e6, "qp-complex": 600e6}


def _col(fp, cx, intop, load, store, storevm, imm, branch, nop,
         total, time_us, eff, mem):
    return {
        "FP_OP": fp, "Complex_OP": cx, "INT_OP": intop, "Load": load,
        "Store": store, "StoreVM": storevm, "Immediate": imm,
        "Branch": branch, "NOP": nop, "Total": total, "Time_us": time_us,
        "Efficiency_pct": eff, "Memory_pct": mem,
    }


# (radix, points) -> {variant -> row dict}; None marks a blank cell.
TABLES: dict[tuple[int, int], dict[str, dict[str, float | None]]] = {
    (4, 4096): {
        "dp":            _col(13440, None, 2880, 19968, 49152, None, 1287, 90, None, 86817, 112.60, 15.48, 79.61),
        "dp-vm":         _col(13440, None, 2880, 19968, 16384, 8192, 1287, 90, None, 62214, 80.73, 21.60, 71.59),
        "dp-complex":    _col(7680, 2880, 2880, 19968, 49152, None, 1287, 90, None, 83937, 108.87, 15.82, 82.35),
        "dp-vm-complex": _col(7680, 2880, 2880, 19968, 16384, 8192, 1287, 90, None, 59361, 76.99, 22.64, 75.04),
        "qp":            _col(13440, None, 2880, 19968, 24576, None, 1287, 90, None, 62241, 103.74, 21.59, 71.56),
        "qp-complex":    _col(7680, 2880, 2880, 19968, 24576, None, 1287, 90, None, 59361, 98.94, 22.64, 75.03),
    },
    (4, 1024): {
        "dp":            _col(2752, None, 576, 4096, 10240, None, 262, 114, None, 18040, 23.40, 15.25, 79.47),
        "dp-vm":         _col(2752, None, 576, 4096, 4096, 1536, 262, 114, None, 13432, 17.42, 20.49, 72.42),
        "dp-complex":    _col(1600, 576, 576, 4096, 10240, None, 262, 114, None, 17464, 22.65, 15.76, 82.09),
        "dp-vm-complex": _col(1600, 576, 576, 4096, 4096, 1536, 262, 114, None, 12856, 16.67, 21.41, 75.67),
        "qp":            _col(2752, None, 576, 4096, 5120, None, 262, 114, None, 12920, 21.53, 21.30, 71.33),
        "qp-complex":    _col(1600, 576, 576, 4096, 5120, None, 262, 114, None, 12344, 20.57, 22.29, 74.66),
    },
    (4, 256): {
        "dp":            _col(536, None, 108, 800, 2048, None, 76, 78, 493, 4193, 5.44, 12.78, 67.92),
        "dp-vm":         _col(536, None, 108, 800, 1024, 256, 76, 78, 493, 3371, 4.37, 15.90, 61.70),
        "dp-complex":    _col(320, 108, 108, 800, 2048, None, 67, 78, 79, 3608, 4.68, 14.86, 78.94),
        "dp-vm-complex": _col(320, 108, 108, 800, 1024, 256, 67, 78, 79, 2840, 3.68, 18.87, 73.24),
        "qp":            _col(536, None, 108, 800, 1024, None, None, 78, 301, 2847, 4.75, 18.48, 64.07),
        "qp-complex":    _col(320, 108, 108, 800, 1024, None, 67, 78, 79, 2584, 4.31, 20.74, 70.59),
    },
    (8, 4096): {
        "dp":            _col(11840, None, 3296, 13568, 32768, None, 328, None, None, 61896, 80.28, 19.13, 74.86),
        "dp-vm":         _col(11840, None, 3296, 13568, 16384, 4096, 328, None, None, 49608, 64.34, 23.87, 68.63),
        "dp-complex":    _col(7808, 2016, 2720, 13568, 32768, None, 343, None, None, 59319, 76.94, 19.96, 78.11),
        "dp-vm-complex": _col(7808, 2016, 2720, 13568, 16384, 4096, 343, None, None, 47031, 61.00, 25.17, 72.39),
        "qp":            _col(11840, None, 3296, 13568, 16384, None, 328, None, None, 45512, 75.85, 26.02, 65.81),
        "qp-complex":    _col(7808, 2016, 2720, 13568, 16384, None, 343, None, None, 42935, 71.56, 27.57, 69.76),
    },
    (8, 512): {
        "dp":            _col(1068, None, 284, 1216, 3072, None, 40, None, 81, 5827, 7.56, 18.32, 73.59),
        "dp-vm":         _col(1068, None, 284, 1216, 2048, 256, 40, None, 81, 5059, 6.56, 21.11, 69.58),
        "dp-complex":    _col(732, 168, 236, 1216, 3072, None, 40, None, 81, 5779, 7.50, 18.48, 74.20),
        "dp-vm-complex": _col(732, 168, 236, 1216, 2048, 256, 40, None, 81, 5011, 6.50, 21.31, 70.25),
        "qp":            _col(1068, None, 284, 1216, 1536, None, 40, None, 40, 4250, 7.08, 25.13, 64.75),
        "qp-complex":    _col(732, 168, 236, 1216, 1536, None, 40, None, 40, 4202, 7.00, 25.42, 65.49),
    },
    (16, 4096): {
        "dp":            _col(12384, None, 1968, 9984, 24576, None, 196, None, None, 49186, 63.80, 25.18, 70.26),
        "dp-vm":         _col(12384, None, 1968, 9984, 12288, 2048, 196, None, None, 38946, 50.51, 31.80, 62.45),
        "dp-complex":    _col(6912, 2880, 1968, 9984, 24576, None, 154, None, None, 46552, 60.38, 27.22, 74.24),
        "dp-vm-complex": _col(6192, 2880, 1968, 9984, 12288, 2048, 64, None, None, 35502, 46.05, 35.69, 68.50),
        "qp":            _col(12384, None, 1968, 9984, 16384, None, 154, None, None, 40952, 68.25, 30.24, 64.39),
        "qp-complex":    _col(6192, 2880, 1968, 9984, 16384, None, 64, None, None, 37550, 62.58, 33.75, 70.22),
    },
    (16, 1024): {
        "dp":            _col(2624, None, 392, 2496, 6144, None, 143, None, None, 11961, 15.51, 21.94, 72.23),
        "dp-vm":         _col(2624, None, 392, 2496, 4096, 512, 147, None, None, 10413, 13.51, 25.20, 68.07),
        "dp-complex":    _col(1472, 600, 392, 2496, 6144, None, 25, None, None, 11290, 14.64, 23.67, 76.53),
        "dp-vm-complex": _col(1472, 600, 392, 2496, 4096, 512, 25, None, None, 9755, 12.65, 27.40, 72.82),
        "qp":            _col(2624, None, 392, 2496, 3072, None, 143, None, None, 8889, 14.82, 29.52, 62.64),
        "qp-complex":    _col(1472, 600, 392, 2496, 3072, None, 25, None, None, 8219, 13.70, 32.51, 67.75),
    },
    (16, 256): {
        "dp":            _col(486, None, 72, 376, 1024, None, 74, None, 132, 2216, 2.87, 21.93, 63.18),
        "dp-complex":    _col(288, 105, 72, 376, 1024, None, 16, None, 29, 1962, 2.54, 25.38, 71.36),
        "qp":            _col(486, None, 72, 376, 512, None, 74, None, 132, 1704, 2.84, 28.51, 52.11),
        "qp-complex":    _col(288, 105, 72, 376, 512, None, 16, None, 29, 1450, 2.42, 34.34, 61.24),
    },
}

# Streaming FFT IP core comparison (time in us; ratios as printed).
IP_CORE_COMPARISON = {
    256: {"ip_time_us": 0.50, "gpgpu_time_us": 2.54, "ratio_performance": 5.1, "ratio_normalized": 2.6},
    1024: {"ip_time_us": 1.84, "gpgpu_time_us": 12.65, "ratio_performance": 6.9, "ratio_normalized": 3.5},
    4096: {"ip_time_us": 6.92, "gpgpu_time_us": 46.05, "ratio_performance": 6.7, "ratio_normalized": 3.3},
}

# FFT efficiency (percent of peak FP) of this design vs. two datacenter GPUs.
GPU_EFFICIENCY = {
    "eGPU": {256: 25, 1024: 27, 4096: 36},
    "V100": {256: 15, 1024: 18, 4096: 21},
    "A100": {256: 21, 1024: 27, 4096: 33},
}

# Derived cells that cannot be reproduced from the raw rows of their own
# column under either total; each entry carries the observed inconsistency.
DERIVED_EXCLUSIONS: dict[tuple[int, int, str, str], str] = {
    (4, 4096, "dp-complex", "Efficiency_pct"):
        "printed 15.82 but 7680+... rows give 13440-baseline efficiency 16.01",
    (4, 256, "qp", "Efficiency_pct"):
        "printed 18.48 implies a ~2900-cycle total; printed time implies 2847",
    (16, 4096, "dp-vm-complex", "Efficiency_pct"):
        "printed 35.69; rows give 34.9 (12384 baseline over 35424/35502)",
}


@dataclass(frozen=True)
class GoldenKey:
    radix: int
    points: int
    variant: str


def golden_tables() -> dict[tuple[int, int], dict[str, dict[str, float | None]]]:
    """All embedded profiling cells, keyed by (radix, points) then variant."""
    return TABLES


def lookup(radix: int, points: int, variant: str) -> dict[str, float | None]:
    try:
        return TABLES[(radix, points)][variant]
    except KeyError:
        raise KeyError(f"no reference column for radix-{radix} {points}-point {variant!r}") from None


def has_column(radix: int, points: int, variant: str) -> bool:
    return (radix, points) in TABLES and variant in TABLES[(radix, points)]


def row_sum_total(column: dict[str, float | None]) -> float:
    """Sum of the printed category rows, treating blanks as zero."""
    return float(sum(column[row] or 0 for row in CATEGORY_ROWS))


def baseline_fp(radix: int, points: int) -> float:
    """FP cycles of the non-complex build of the same program (dp column)."""
    return float(TABLES[(radix, points)]["dp"]["FP_OP"])  # type: ignore[arg-type]


def derived_consistency(radix: int, points: int, variant: str) -> dict[str, dict]:
    """Check each printed derived row against values recomputed from raw cells.

    The printed Total and the row sum occasionally disagree by a small,
    evidently typographical amount, and different derived rows of the same
    column track different ones of the two; a derived row therefore passes if
    it is reproduced by either candidate total.
    """
    col = lookup(radix, points, variant)
    clock = CLOCK_HZ[variant]
    base = baseline_fp(radix, points)
    mem_cycles = (col["Load"] or 0) + (col["Store"] or 0) + (col["StoreVM"] or 0)
    candidates = {"row_sum": row_sum_total(col)}
    if col["Total"] is not None:
        candidates["printed_total"] = float(col["Total"])

    tolerance = {"Time_us": 0.01, "Efficiency_pct": 0.02, "Memory_pct": 0.02}
    out: dict[str, dict] = {}
    for row in ("Time_us", "Efficiency_pct", "Memory_pct"):
        printed = col[row]
        if printed is None:
            out[row] = {"status": "missing"}
            continue
        results = {}
        for name, total in candidates.items():
            if row == "Time_us":
                value = total / clock * 1e6
            elif row == "Efficiency_pct":
                value = 100.0 * base / total
            else:
                value = 100.0 * mem_cycles / total
            results[name] = value
        ok = any(abs(v - printed) <= tolerance[row] + 1e-9 for v in results.values())
        excluded = (radix, points, variant, row) in DERIVED_EXCLUSIONS
        out[row] = {
            "status": "excluded" if excluded else ("pass" if ok else "fail"),
            "printed": printed,
            "recomputed": results,
            "note": DERIVED_EXCLUSIONS.get((radix, points, variant, row)),
        }
    return out
