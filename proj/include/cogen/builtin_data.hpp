#pragma once

// Built-in copies of data/lexicon.json and data/presets.json, used when no
// file is configured. tests/test_builtin_data.cpp keeps them in sync.

#include <string_view>

namespace cogen::builtin {

inline constexpr std::string_view kLexiconJson = R"cogen({
  "version": 1,
  "kinds": {
    "Button": ["button"],
    "Input field": ["input field", "text field", "text input", "input", "textbox", "text box"],
    "Icon button": ["icon button"],
    "Menu list": ["menu list", "menu", "dropdown menu"],
    "List items": ["list item", "list items", "list row"],
    "Label": ["label", "caption"]
  },
  "styles": {
    "Basic": ["basic", "simple"],
    "Trendy": ["trendy", "modern"],
    "Playful": ["playful"],
    "Professional": ["professional", "corporate"]
  },
  "subtypes": {
    "Default": ["default"],
    "Light": ["light"],
    "Dark": ["dark"]
  },
  "sizes": {
    "Small": ["small", "compact"],
    "Large": ["large", "big"]
  },
  "properties": {
    "size": ["size"],
    "border_radius": ["border radius", "corner radius", "radius"],
    "stroke_weight": ["stroke weight", "stroke width", "border width", "border weight"],
    "font_size": ["font size", "text size"],
    "font_weight": ["font weight"],
    "font_family": ["font family", "font", "typeface"],
    "width": ["width"],
    "height": ["height"],
    "color": ["color", "colour", "background color", "background colour", "fill color", "fill"],
    "stroke_color": ["stroke color", "stroke colour", "border color", "border colour"],
    "text_color": ["text color", "text colour", "font color", "font colour"]
  },
  "numeric_properties": ["border_radius", "stroke_weight", "font_size", "font_weight", "width", "height"],
  "color_properties": ["color", "stroke_color", "text_color"],
  "effects": {
    "DROP_SHADOW": ["drop shadow", "shadow"],
    "INNER_SHADOW": ["inner shadow"],
    "LAYER_BLUR": ["layer blur", "blur"],
    "BACKGROUND_BLUR": ["background blur"]
  },
  "color_words": {
    "red": "#EF4444",
    "orange": "#F97316",
    "yellow": "#EAB308",
    "green": "#22C55E",
    "blue": "#3B82F6",
    "purple": "#A855F7",
    "pink": "#EC4899",
    "black": "#000000",
    "white": "#FFFFFF",
    "gray": "#6B7280",
    "grey": "#6B7280"
  }
}
)cogen";

inline constexpr std::string_view kPresetsJson = R"cogen({
  "version": 1,
  "presets": {
    "Basic/Button": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 120,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.9529,
        "g": 0.9569,
        "b": 0.9647,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.8196,
        "g": 0.8353,
        "b": 0.8588,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 4,
      "text_color": {
        "r": 0.0667,
        "g": 0.0941,
        "b": 0.1529,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 400,
      "font_size": 14
    },
    "Basic/Input field": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 240,
      "x": 0,
      "y": 0,
      "color": {
        "r": 1.0,
        "g": 1.0,
        "b": 1.0,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.8196,
        "g": 0.8353,
        "b": 0.8588,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 4,
      "text_color": {
        "r": 0.4196,
        "g": 0.4471,
        "b": 0.502,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 400,
      "font_size": 14
    },
    "Basic/Icon button": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 40,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.9529,
        "g": 0.9569,
        "b": 0.9647,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.8196,
        "g": 0.8353,
        "b": 0.8588,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 4
    },
    "Basic/Menu list": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 120,
      "width": 200,
      "x": 0,
      "y": 0,
      "color": {
        "r": 1.0,
        "g": 1.0,
        "b": 1.0,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.8196,
        "g": 0.8353,
        "b": 0.8588,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 4,
      "text_color": {
        "r": 0.0667,
        "g": 0.0941,
        "b": 0.1529,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 400,
      "font_size": 14
    },
    "Basic/List items": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 200,
      "x": 0,
      "y": 0,
      "color": {
        "r": 1.0,
        "g": 1.0,
        "b": 1.0,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.8196,
        "g": 0.8353,
        "b": 0.8588,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 4,
      "text_color": {
        "r": 0.0667,
        "g": 0.0941,
        "b": 0.1529,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 400,
      "font_size": 14
    },
    "Basic/Label": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 20,
      "width": 80,
      "x": 0,
      "y": 0,
      "text_color": {
        "r": 0.0667,
        "g": 0.0941,
        "b": 0.1529,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 400,
      "font_size": 14
    },
    "Trendy/Button": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 120,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.5451,
        "g": 0.3608,
        "b": 0.9647,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.4863,
        "g": 0.2275,
        "b": 0.9294,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 12,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.5451,
        "g": 0.3608,
        "b": 0.9647,
        "a": 0.4
      },
      "text_color": {
        "r": 1.0,
        "g": 1.0,
        "b": 1.0,
        "a": 1.0
      },
      "font_family": "Poppins",
      "font_weight": 500,
      "font_size": 14
    },
    "Trendy/Input field": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 240,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.9608,
        "g": 0.9529,
        "b": 1.0,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.4863,
        "g": 0.2275,
        "b": 0.9294,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 12,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.5451,
        "g": 0.3608,
        "b": 0.9647,
        "a": 0.4
      },
      "text_color": {
        "r": 0.4863,
        "g": 0.2275,
        "b": 0.9294,
        "a": 1.0
      },
      "font_family": "Poppins",
      "font_weight": 500,
      "font_size": 14
    },
    "Trendy/Icon button": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 40,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.5451,
        "g": 0.3608,
        "b": 0.9647,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.4863,
        "g": 0.2275,
        "b": 0.9294,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 12,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.5451,
        "g": 0.3608,
        "b": 0.9647,
        "a": 0.4
      }
    },
    "Trendy/Menu list": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 120,
      "width": 200,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.9608,
        "g": 0.9529,
        "b": 1.0,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.4863,
        "g": 0.2275,
        "b": 0.9294,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 12,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.5451,
        "g": 0.3608,
        "b": 0.9647,
        "a": 0.4
      },
      "text_color": {
        "r": 0.298,
        "g": 0.1137,
        "b": 0.5843,
        "a": 1.0
      },
      "font_family": "Poppins",
      "font_weight": 500,
      "font_size": 14
    },
    "Trendy/List items": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 200,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.9608,
        "g": 0.9529,
        "b": 1.0,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.4863,
        "g": 0.2275,
        "b": 0.9294,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 12,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.5451,
        "g": 0.3608,
        "b": 0.9647,
        "a": 0.4
      },
      "text_color": {
        "r": 0.298,
        "g": 0.1137,
        "b": 0.5843,
        "a": 1.0
      },
      "font_family": "Poppins",
      "font_weight": 500,
      "font_size": 14
    },
    "Trendy/Label": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 20,
      "width": 80,
      "x": 0,
      "y": 0,
      "text_color": {
        "r": 0.298,
        "g": 0.1137,
        "b": 0.5843,
        "a": 1.0
      },
      "font_family": "Poppins",
      "font_weight": 500,
      "font_size": 14
    },
    "Playful/Button": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 120,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.9608,
        "g": 0.6196,
        "b": 0.0431,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.851,
        "g": 0.4667,
        "b": 0.0235,
        "a": 1.0
      },
      "stroke_weight": 2,
      "border_radius": 20,
      "text_color": {
        "r": 0.1216,
        "g": 0.1608,
        "b": 0.2157,
        "a": 1.0
      },
      "font_family": "Nunito",
      "font_weight": 700,
      "font_size": 14
    },
    "Playful/Input field": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 240,
      "x": 0,
      "y": 0,
      "color": {
        "r": 1.0,
        "g": 0.9843,
        "b": 0.9216,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.851,
        "g": 0.4667,
        "b": 0.0235,
        "a": 1.0
      },
      "stroke_weight": 2,
      "border_radius": 20,
      "text_color": {
        "r": 0.7059,
        "g": 0.3255,
        "b": 0.0353,
        "a": 1.0
      },
      "font_family": "Nunito",
      "font_weight": 700,
      "font_size": 14
    },
    "Playful/Icon button": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 40,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.9608,
        "g": 0.6196,
        "b": 0.0431,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.851,
        "g": 0.4667,
        "b": 0.0235,
        "a": 1.0
      },
      "stroke_weight": 2,
      "border_radius": 20
    },
    "Playful/Menu list": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 120,
      "width": 200,
      "x": 0,
      "y": 0,
      "color": {
        "r": 1.0,
        "g": 0.9843,
        "b": 0.9216,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.851,
        "g": 0.4667,
        "b": 0.0235,
        "a": 1.0
      },
      "stroke_weight": 2,
      "border_radius": 20,
      "text_color": {
        "r": 0.4706,
        "g": 0.2078,
        "b": 0.0588,
        "a": 1.0
      },
      "font_family": "Nunito",
      "font_weight": 700,
      "font_size": 14
    },
    "Playful/List items": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 200,
      "x": 0,
      "y": 0,
      "color": {
        "r": 1.0,
        "g": 0.9843,
        "b": 0.9216,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.851,
        "g": 0.4667,
        "b": 0.0235,
        "a": 1.0
      },
      "stroke_weight": 2,
      "border_radius": 20,
      "text_color": {
        "r": 0.4706,
        "g": 0.2078,
        "b": 0.0588,
        "a": 1.0
      },
      "font_family": "Nunito",
      "font_weight": 700,
      "font_size": 14
    },
    "Playful/Label": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 20,
      "width": 80,
      "x": 0,
      "y": 0,
      "text_color": {
        "r": 0.4706,
        "g": 0.2078,
        "b": 0.0588,
        "a": 1.0
      },
      "font_family": "Nunito",
      "font_weight": 700,
      "font_size": 14
    },
    "Professional/Button": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 120,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.1451,
        "g": 0.3882,
        "b": 0.9216,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.1137,
        "g": 0.3059,
        "b": 0.8471,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 8,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.0,
        "g": 0.0,
        "b": 0.0,
        "a": 0.25
      },
      "text_color": {
        "r": 1.0,
        "g": 1.0,
        "b": 1.0,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 600,
      "font_size": 14
    },
    "Professional/Input field": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 240,
      "x": 0,
      "y": 0,
      "color": {
        "r": 1.0,
        "g": 1.0,
        "b": 1.0,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.1137,
        "g": 0.3059,
        "b": 0.8471,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 8,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.0,
        "g": 0.0,
        "b": 0.0,
        "a": 0.25
      },
      "text_color": {
        "r": 0.3922,
        "g": 0.4549,
        "b": 0.5451,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 600,
      "font_size": 14
    },
    "Professional/Icon button": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 40,
      "x": 0,
      "y": 0,
      "color": {
        "r": 0.1451,
        "g": 0.3882,
        "b": 0.9216,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.1137,
        "g": 0.3059,
        "b": 0.8471,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 8,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.0,
        "g": 0.0,
        "b": 0.0,
        "a": 0.25
      }
    },
    "Professional/Menu list": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 120,
      "width": 200,
      "x": 0,
      "y": 0,
      "color": {
        "r": 1.0,
        "g": 1.0,
        "b": 1.0,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.1137,
        "g": 0.3059,
        "b": 0.8471,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 8,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.0,
        "g": 0.0,
        "b": 0.0,
        "a": 0.25
      },
      "text_color": {
        "r": 0.0588,
        "g": 0.0902,
        "b": 0.1647,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 600,
      "font_size": 14
    },
    "Professional/List items": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 40,
      "width": 200,
      "x": 0,
      "y": 0,
      "color": {
        "r": 1.0,
        "g": 1.0,
        "b": 1.0,
        "a": 1.0
      },
      "stroke_color": {
        "r": 0.1137,
        "g": 0.3059,
        "b": 0.8471,
        "a": 1.0
      },
      "stroke_weight": 1,
      "border_radius": 8,
      "effect_name": "DROP_SHADOW",
      "effect_color": {
        "r": 0.0,
        "g": 0.0,
        "b": 0.0,
        "a": 0.25
      },
      "text_color": {
        "r": 0.0588,
        "g": 0.0902,
        "b": 0.1647,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 600,
      "font_size": 14
    },
    "Professional/Label": {
      "variant_properties": {
        "State": "Default"
      },
      "height": 20,
      "width": 80,
      "x": 0,
      "y": 0,
      "text_color": {
        "r": 0.0588,
        "g": 0.0902,
        "b": 0.1647,
        "a": 1.0
      },
      "font_family": "Inter",
      "font_weight": 600,
      "font_size": 14
    }
  }
}
)cogen";

}  // namespace cogen::builtin
