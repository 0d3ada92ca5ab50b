from . import svg
from .svg import DiagramGeometry, render_braid, save_braid_svg
