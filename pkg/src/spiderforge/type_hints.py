"""Type hints used in spiderforge."""

import os
from typing import Dict, List, Sequence, Tuple, Union

# a file buffer, one entry per line
Lines = List[str]
# placeholder name -> substituted text
Bindings = Dict[str, str]
# (key, option) as written into a settings file
ConfigPair = Tuple[str, str]
ConfigOverrides = Sequence[ConfigPair]
PathLike = Union[str, "os.PathLike[str]"]

#  LocalWords:  ConfigPair
