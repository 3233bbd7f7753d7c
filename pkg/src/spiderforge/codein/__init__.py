from spiderforge.codein.change_once import (
    ChangeOnceReport,
    apply_change_once_set,
    change_once_targets,
)
from spiderforge.codein.insert import (
    InsertionRequest,
    Placement,
    insert_at_index,
    insert_in_block,
    resolve_insertion,
)
from spiderforge.codein.template import (
    Template,
    TemplateSet,
    instantiate_template,
    list_template_sets,
    load_skeleton,
    load_template_set,
)
