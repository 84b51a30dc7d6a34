#pragma once

#include "cogen/error.hpp"
#include "cogen/component_model.hpp"
#include "cogen/prompt_parser.hpp"
#include "cogen/presets.hpp"
#include "cogen/prompt_synthesis.hpp"
#include "cogen/json_emitter.hpp"
#include "cogen/figma_extract.hpp"
#include "cogen/figma_client.hpp"
#include "cogen/model_adapter.hpp"
#include "cogen/eval_harness.hpp"
#include "cogen/service.hpp"
