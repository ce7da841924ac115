from .base import Format
from .config import ConfigError, ConfigLine, ConfigDocument, Config
from .gnuplot import Curve, PlotScript, Gnuplot
from .table import TableDocument, Table

__all__ = ['Format',
           'ConfigError', 'ConfigLine', 'ConfigDocument', 'Config',
           'Curve', 'PlotScript', 'Gnuplot',
           'TableDocument', 'Table']
