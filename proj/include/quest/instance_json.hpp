#pragma once

#include <string>

#include "quest/model.hpp"

namespace quest {

// JSON wire format for an Instance. Strict on read: unknown keys anywhere in
// the document are a ParseError, as are missing keys, wrong types, and
// segment arrays whose length disagrees with |segments|. The emitted form is
// canonical (sorted keys, stable number formatting), so generating the same
// instance twice yields byte-identical files.
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& inst);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

} // namespace quest
