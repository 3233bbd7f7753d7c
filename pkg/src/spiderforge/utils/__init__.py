from spiderforge.utils.atomic import (
    atomic_write_text,
    line_terminator,
    read_text,
    split_lines,
)
from spiderforge.utils.logging import set_log_level, setup_logger
from spiderforge.utils.utility_functions import (
    class_name,
    is_identifier,
    leading_whitespace,
    utc_now,
)
