#include "stim/image_io.hpp"

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include <jpeglib.h>
#include <png.h>

#include "stim/errors.hpp"

namespace stim {
namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f) throw IoError("cannot open '" + path + "'");
    return f;
}

// libpng reports errors through longjmp; the jump target owns cleanup.
void png_error_to_jmp(png_structp png, png_const_charp) {
    std::longjmp(png_jmpbuf(png), 1);
}
void png_quiet_warning(png_structp, png_const_charp) {}

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() {
        if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    }
};

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() {
        if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    }
};

// Decodes a PNG into tightly packed rows of `channels` samples per pixel.
std::vector<std::uint8_t> decode_png(const std::string& path, int channels, int& width,
                                     int& height) {
    FilePtr file = open_file(path, "rb");

    unsigned char sig[8];
    if (std::fread(sig, 1, 8, file.get()) != 8 || png_sig_cmp(sig, 0, 8) != 0)
        throw FormatError("'" + path + "' is not a valid PNG");

    PngReader r;
    r.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_to_jmp,
                                   png_quiet_warning);
    if (!r.png) throw FormatError("libpng init failed");
    r.info = png_create_info_struct(r.png);
    if (!r.info) throw FormatError("libpng init failed");

    std::vector<std::uint8_t> pixels;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(r.png)))
        throw FormatError("failed to decode PNG '" + path + "'");

    png_init_io(r.png, file.get());
    png_set_sig_bytes(r.png, 8);
    png_read_info(r.png, r.info);

    width = static_cast<int>(png_get_image_width(r.png, r.info));
    height = static_cast<int>(png_get_image_height(r.png, r.info));
    const int color = png_get_color_type(r.png, r.info);
    const int depth = png_get_bit_depth(r.png, r.info);

    if (depth == 16) png_set_strip_16(r.png);
    if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(r.png);
    if (color == PNG_COLOR_TYPE_GRAY && depth < 8) png_set_expand_gray_1_2_4_to_8(r.png);
    if (png_get_valid(r.png, r.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(r.png);
    if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(r.png);
    if (channels == 3) {
        if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA)
            png_set_gray_to_rgb(r.png);
    } else {
        if (color == PNG_COLOR_TYPE_RGB || color == PNG_COLOR_TYPE_RGB_ALPHA ||
            color == PNG_COLOR_TYPE_PALETTE)
            png_set_rgb_to_gray_fixed(r.png, 1, -1, -1);
    }
    png_read_update_info(r.png, r.info);

    if (png_get_channels(r.png, r.info) != static_cast<png_byte>(channels))
        throw FormatError("unexpected channel count in '" + path + "'");

    pixels.resize(static_cast<std::size_t>(width) * height * channels);
    rows.resize(height);
    for (int y = 0; y < height; ++y)
        rows[y] = pixels.data() + static_cast<std::size_t>(y) * width * channels;
    png_read_image(r.png, rows.data());
    png_read_end(r.png, nullptr);
    return pixels;
}

struct JpegErrorMgr {
    jpeg_error_mgr base;
    std::jmp_buf jump;
};

void jpeg_error_to_jmp(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(mgr->jump, 1);
}

RasterImage decode_jpeg(const std::string& path) {
    FilePtr file = open_file(path, "rb");

    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_to_jmp;
    err.base.output_message = [](j_common_ptr) {};

    jpeg_create_decompress(&cinfo);
    RasterImage image;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw FormatError("failed to decode JPEG '" + path + "'");
    }

    jpeg_stdio_src(&cinfo, file.get());
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);

    image.width = static_cast<int>(cinfo.output_width);
    image.height = static_cast<int>(cinfo.output_height);
    image.data.resize(static_cast<std::size_t>(image.width) * image.height * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW row = image.data.data() +
                       static_cast<std::size_t>(cinfo.output_scanline) * image.width * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return image;
}

void write_png(const std::string& path, const std::uint8_t* pixels, int width, int height,
               int channels) {
    FilePtr file = open_file(path, "wb");
    PngWriter w;
    w.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, png_error_to_jmp,
                                    png_quiet_warning);
    if (!w.png) throw IoError("libpng init failed");
    w.info = png_create_info_struct(w.png);
    if (!w.info) throw IoError("libpng init failed");

    std::vector<png_bytep> rows(height);
    if (setjmp(png_jmpbuf(w.png)))
        throw IoError("failed to write PNG '" + path + "'");

    png_init_io(w.png, file.get());
    png_set_IHDR(w.png, w.info, width, height, 8,
                 channels == 3 ? PNG_COLOR_TYPE_RGB : PNG_COLOR_TYPE_GRAY,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(w.png, w.info);
    for (int y = 0; y < height; ++y)
        rows[y] = const_cast<png_bytep>(pixels + static_cast<std::size_t>(y) * width * channels);
    png_write_image(w.png, rows.data());
    png_write_end(w.png, nullptr);
}

}  // namespace

RasterImage load_image(const std::string& path) {
    {
        FilePtr file = open_file(path, "rb");
        unsigned char magic[2] = {0, 0};
        if (std::fread(magic, 1, 2, file.get()) == 2 && magic[0] == 0xFF && magic[1] == 0xD8) {
            file.reset();
            return decode_jpeg(path);
        }
    }
    RasterImage image;
    image.data = decode_png(path, 3, image.width, image.height);
    return image;
}

ForegroundMask load_mask(const std::string& path) {
    int width = 0, height = 0;
    std::vector<std::uint8_t> gray = decode_png(path, 1, width, height);
    ForegroundMask mask;
    mask.values.resize(height, width);
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x)
            mask.values(y, x) = gray[static_cast<std::size_t>(y) * width + x] != 0 ? 1 : 0;
    return mask;
}

void save_png(const std::string& path, const RasterImage& image) {
    if (image.width <= 0 || image.height <= 0 ||
        image.data.size() != static_cast<std::size_t>(image.width) * image.height * 3)
        throw ContractError("save_png: malformed image");
    write_png(path, image.data.data(), image.width, image.height, 3);
}

void save_mask_png(const std::string& path, const ForegroundMask& mask) {
    std::vector<std::uint8_t> gray(static_cast<std::size_t>(mask.width()) * mask.height());
    for (int y = 0; y < mask.height(); ++y)
        for (int x = 0; x < mask.width(); ++x)
            gray[static_cast<std::size_t>(y) * mask.width() + x] = mask.values(y, x) ? 255 : 0;
    write_png(path, gray.data(), mask.width(), mask.height(), 1);
}

void save_jpeg(const std::string& path, const RasterImage& image, int quality) {
    FilePtr file = open_file(path, "wb");

    jpeg_compress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.base);
    err.base.error_exit = jpeg_error_to_jmp;

    jpeg_create_compress(&cinfo);
    if (setjmp(err.jump)) {
        jpeg_destroy_compress(&cinfo);
        throw IoError("failed to write JPEG '" + path + "'");
    }

    jpeg_stdio_dest(&cinfo, file.get());
    cinfo.image_width = static_cast<JDIMENSION>(image.width);
    cinfo.image_height = static_cast<JDIMENSION>(image.height);
    cinfo.input_components = 3;
    cinfo.in_color_space = JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    while (cinfo.next_scanline < cinfo.image_height) {
        JSAMPROW row = const_cast<JSAMPROW>(
            image.data.data() + static_cast<std::size_t>(cinfo.next_scanline) * image.width * 3);
        jpeg_write_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
}

}  // namespace stim
