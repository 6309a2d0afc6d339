"""The eighteen reference panels: parameters and expected connectedness."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .algebra import CollinearDigitSet, Quadratic
from .criteria import Verdict, classify_consecutive, classify_nonconsecutive, gap_polynomial
from .neighbors import hata_connected
from .render import RasterConfig, RasterResult, rasterize, write_image


@dataclass(frozen=True)
class Panel:
    name: str
    b: int
    c: int
    connected: bool  # as captioned
    m: int | None = None
    gap: tuple[int, int, int] | None = None  # (p, q, s)

    @property
    def quadratic(self) -> Quadratic:
        return Quadratic(self.b, self.c)

    @property
    def digits(self) -> CollinearDigitSet:
        if self.gap is not None:
            return CollinearDigitSet.gap(*self.gap)
        return CollinearDigitSet.consecutive(self.m)

    def classify(self) -> Verdict:
        if self.gap is not None:
            return classify_nonconsecutive(*self.gap)
        return classify_consecutive(self.quadratic, self.m)

    def oracle(self) -> bool:
        return hata_connected(self.quadratic, self.digits)

    def describe(self) -> str:
        if self.gap is not None:
            p, q, s = self.gap
            return f"b={self.b} c={self.c} p={p} q={q} s={s}"
        return f"b={self.b} c={self.c} m={self.m}"


def _consecutive(fig, b, c, m_dis, m_con):
    return [
        Panel(f"fig{fig}a", b, c, False, m=m_dis),
        Panel(f"fig{fig}b", b, c, True, m=m_con),
    ]


def _gap(fig, p, q, s_con, s_dis):
    f = gap_polynomial(p, q)
    return [
        Panel(f"fig{fig}a", f.b, f.c, True, gap=(p, q, s_con)),
        Panel(f"fig{fig}b", f.b, f.c, False, gap=(p, q, s_dis)),
    ]


PANELS: tuple[Panel, ...] = tuple(
    _consecutive(1, -4, 4, 1, 2)
    + _consecutive(2, -10, 24, 13, 15)
    + _consecutive(3, -2, -24, 19, 21)
    + _gap(4, 6, 4, 0, 1)
    + _gap(5, 2, 2, 1, 2)
    + _gap(6, 3, 4, 1, 2)
    + _consecutive(7, 6, 12, 6, 7)
    + _consecutive(8, 4, 8, 4, 5)
    + _consecutive(9, 3, 9, 6, 7)
)


def render_panel(panel: Panel, cfg: RasterConfig = RasterConfig()) -> RasterResult:
    return rasterize(panel.quadratic, panel.digits, cfg)


def reproduce(outdir, cfg: RasterConfig = RasterConfig(), panels=PANELS):
    """Render every panel to outdir/<name>.pgm; yield one manifest line each."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for panel in panels:
        result = render_panel(panel, cfg)
        write_image(result, outdir / f"{panel.name}.pgm")
        verdict = panel.classify()
        yield (
            f"{panel.name} {panel.describe()} verdict={verdict.status.value} "
            f"oracle={'Connected' if panel.oracle() else 'Disconnected'} "
            f"components={result.component_count} depth={result.depth}"
        )
