// Copyright (c) signforge contributors
// SPDX-License-Identifier: Apache-2.0
#include "signforge/core/raster.hpp"

#include <algorithm>

namespace signforge {

RasterF decode_srgb(const RasterU8& in) {
    RasterF out(in.width, in.height, in.channels);
    const bool has_alpha = in.channels == 4 || in.channels == 2;
    const int alpha_channel = in.channels - 1;
    for (std::size_t i = 0; i < in.data.size(); ++i) {
        const float v = in.data[i] / 255.0f;
        const int c = static_cast<int>(i % in.channels);
        out.data[i] = (has_alpha && c == alpha_channel) ? v : srgb_to_linear(v);
    }
    return out;
}

RasterF resize_box(const RasterF& in, int out_w, int out_h) {
    RasterF out(out_w, out_h, in.channels);
    const double sx = static_cast<double>(in.width) / out_w;
    const double sy = static_cast<double>(in.height) / out_h;
    for (int oy = 0; oy < out_h; ++oy) {
        const int y0 = static_cast<int>(oy * sy);
        const int y1 = std::max(y0 + 1, static_cast<int>(std::ceil((oy + 1) * sy)));
        for (int ox = 0; ox < out_w; ++ox) {
            const int x0 = static_cast<int>(ox * sx);
            const int x1 = std::max(x0 + 1, static_cast<int>(std::ceil((ox + 1) * sx)));
            for (int c = 0; c < in.channels; ++c) {
                double acc = 0.0;
                int n = 0;
                for (int y = y0; y < y1 && y < in.height; ++y)
                    for (int x = x0; x < x1 && x < in.width; ++x) {
                        acc += in.at(x, y, c);
                        ++n;
                    }
                out.at(ox, oy, c) = n > 0 ? static_cast<float>(acc / n) : 0.0f;
            }
        }
    }
    return out;
}

}  // namespace signforge
