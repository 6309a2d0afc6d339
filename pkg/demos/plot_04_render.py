"""
Rendering the reference panels
==============================

Each panel is rasterized at 512 px and its 8-connected components counted.
Connected attractors come out as a single component.
"""

import sys
from pathlib import Path

from selfaffine.figures import PANELS, render_panel
from selfaffine.render import RasterConfig, write_image

outdir = Path(sys.argv[1] if len(sys.argv) > 1 else "figures")
outdir.mkdir(exist_ok=True)

cfg = RasterConfig(size=512)
for panel in PANELS:
    r = render_panel(panel, cfg)
    write_image(r, outdir / f"{panel.name}.ppm", color=True)
    expected = "connected" if panel.connected else "disconnected"
    print(f"{panel.name:6} {panel.describe():28} {expected:12} components={r.component_count}")
