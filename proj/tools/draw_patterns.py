#!/usr/bin/env python3
"""Draws the ten reference digit patterns as '.'/'#' rasters (28x28, stroke ~3 px).

Each digit is a list of strokes; a stroke is a polyline in a 20x20 box that is
placed at offset (4, 4), the same framing MNIST uses. Run from the repo root:

    python3 tools/draw_patterns.py patterns
"""
import math
import pathlib
import sys

SIZE = 28
OFFSET = 4
RADIUS = 1.45


def arc(cx, cy, rx, ry, a0, a1, steps=40):
    """Ellipse arc, angles in degrees, screen coordinates (y down)."""
    pts = []
    for k in range(steps + 1):
        a = math.radians(a0 + (a1 - a0) * k / steps)
        pts.append((cx + rx * math.cos(a), cy + ry * math.sin(a)))
    return pts


DIGITS = {
    0: [arc(10, 10, 6, 8.5, 0, 360)],
    1: [[(7, 4.5), (11, 1.5), (11, 18.5)]],
    2: [arc(10, 6, 5.5, 4.5, 190, 360) + [(15, 8.5), (4.5, 18.5), (16, 18.5)]],
    3: [arc(9.5, 5.5, 5, 4, 200, 450), arc(9.5, 14, 5.8, 4.8, -90, 160)],
    4: [[(12, 18.5), (12, 1.5), (3.5, 13), (17, 13)]],
    5: [[(15.5, 1.5), (6, 1.5), (5, 8.5)] + arc(9.5, 13, 6, 5.5, 220, 495)],
    6: [[(14, 2), (10, 1.5)] + arc(10, 10, 5.5, 8.5, 270, 180) + arc(10, 13.5, 5.5, 5, 180, 540)],
    7: [[(4, 1.5), (16, 1.5), (8.5, 18.5)]],
    8: [arc(10, 5.4, 4.5, 3.8, 0, 360), arc(10, 13.8, 5.5, 4.6, 0, 360)],
    9: [arc(10, 6.5, 5.5, 5, 0, 360), [(15.5, 6.5), (15, 12), (11, 18.5)]],
}


def rasterize(strokes):
    grid = [[False] * SIZE for _ in range(SIZE)]
    for stroke in strokes:
        for (x0, y0), (x1, y1) in zip(stroke, stroke[1:]):
            steps = max(2, int(math.hypot(x1 - x0, y1 - y0) * 8))
            for k in range(steps + 1):
                t = k / steps
                cx = OFFSET + x0 + (x1 - x0) * t
                cy = OFFSET + y0 + (y1 - y0) * t
                for h in range(SIZE):
                    for w in range(SIZE):
                        if (w - cx) ** 2 + (h - cy) ** 2 <= RADIUS ** 2:
                            grid[h][w] = True
    return grid


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "patterns")
    out.mkdir(parents=True, exist_ok=True)
    for digit, strokes in DIGITS.items():
        grid = rasterize(strokes)
        text = "".join("".join("#" if v else "." for v in row) + "\n" for row in grid)
        (out / f"{digit}.pattern").write_text(text)


if __name__ == "__main__":
    main()
