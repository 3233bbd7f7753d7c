from spiderforge.confi.config_line import (
    ConfigLine,
    bracket_delta,
    option_extent,
    parse_config_line,
)
from spiderforge.confi.editor import (
    ConfigEdit,
    ConfigEditReport,
    ConfigValue,
    EditAction,
    append_option,
    apply_edit,
    get_option,
    set_option,
    toggle_comment,
)
from spiderforge.confi.wait import wait_for_file
