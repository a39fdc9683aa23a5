"""Plain-text, PPM and SVG renderings of cube approximations."""

from .oracle import Approximation


def corners_text(approx: Approximation) -> str:
    """One corner vector per line, level in the header line."""
    lines = [f"level {approx.level}"]
    for row in approx.corners:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def corners_ppm(approx: Approximation) -> bytes:
    """Binary greyscale image of a planar approximation.

    The grid cell with corner (x, y) maps to pixel column x, row height-1-y,
    so the picture has the usual mathematical orientation.
    """
    if approx.system.d != 2:
        raise ValueError("PPM rendering is defined for 2-dimensional systems only")
    size = approx.system.N**approx.level
    raster = bytearray(b"\xff" * (size * size))
    for x, y in approx.corners:
        raster[(size - 1 - int(y)) * size + int(x)] = 0
    header = f"P5\n{size} {size}\n255\n".encode("ascii")
    return header + bytes(raster)


def corners_svg(approx: Approximation, pixel_size: int = 4) -> str:
    """SVG with one unit square per cube, same orientation as the PPM."""
    if approx.system.d != 2:
        raise ValueError("SVG rendering is defined for 2-dimensional systems only")
    size = approx.system.N**approx.level
    side = size * pixel_size
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{side}" height="{side}" '
        f'viewBox="0 0 {size} {size}" shape-rendering="crispEdges">'
    ]
    for x, y in approx.corners:
        parts.append(
            f'<rect x="{int(x)}" y="{size - 1 - int(y)}" width="1" height="1" fill="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
