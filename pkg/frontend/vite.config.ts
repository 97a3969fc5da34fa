import { defineConfig } from "vite";

// Same-origin in production: the built bundle is served by the translation
// service itself (mal2sign serve --static frontend/dist). The dev server
// proxies /api to a locally running service instead.
export default defineConfig({
  base: "./",
  build: { outDir: "dist" },
  server: {
    proxy: {
      "/api": "http://127.0.0.1:8080",
    },
  },
});
