"""Shared Indonesian word pools for the bundled lexicons and corpus.

Kept in one place so the lexicon and corpus generators stay consistent:
corpus vocabulary is covered by the root dictionary, slang used in
templates has normalization entries, and none of the root words collide
with the stopword list.
"""

# Words that must survive preprocessing untouched (they appear as terms in
# the sample weighting table): never put these in the stopword list, the
# normalization keys, or the root dictionary's strippable space.
PROTECTED_TERMS = {
    "jujur", "aja", "ya", "ni", "org", "bagus", "kaga", "oplas", "tu",
    "foto", "dia", "sblm", "sbml", "dn", "dioplas", "muka", "aneh",
    "kyknya", "gagal", "oplasnya",
}
# of these, the ones that do get entries elsewhere:
#   org -> orang (normalization), bagus/foto/muka/aneh/gagal/jujur (roots)

POSITIVE_ROOTS = [
    "bagus", "cantik", "keren", "indah", "manis", "hebat", "pintar",
    "rajin", "ramah", "lucu", "imut", "seru", "senang", "bangga", "sukses",
    "semangat", "menang", "juara", "mantap", "gemas", "cakep", "elok",
    "molek", "pesona", "kagum", "cinta", "sayang", "suka", "puji",
    "dukung", "doa", "sehat", "kuat", "tulus", "damai", "bahagia", "ceria",
    "riang", "anggun", "menawan", "segar", "bersih", "rapi", "sopan",
    "baik", "mulia", "cerdas", "kreatif", "inspirasi", "positif",
]

NEGATIVE_ROOTS = [
    "jelek", "buruk", "norak", "bodoh", "tolol", "goblok", "dungu",
    "bego", "gendut", "jijik", "muak", "benci", "sampah", "alay", "lebay",
    "palsu", "munafik", "sombong", "angkuh", "licik", "busuk", "kotor",
    "hina", "kampungan", "udik", "katrok", "malas", "gagal", "hancur",
    "rusak", "parah", "payah", "cupu", "jorok", "bau", "dekil", "kumal",
    "buluk", "anjing", "bangsat", "brengsek", "kurang", "murahan",
    "menjijikkan", "memalukan", "norek", "culun", "pesek", "peyot",
    "jerawat",
]

TOPIC_ROOTS = [
    "foto", "video", "wajah", "muka", "rambut", "baju", "gaya", "badan",
    "kulit", "mata", "bibir", "gigi", "senyum", "suara", "lagu", "artis",
    "akun", "komentar", "kamera", "warna", "model", "konten", "panggung",
    "acara", "film", "iklan", "produk", "jualan", "karir", "proyek",
    "teman", "keluarga", "anak", "pacar", "kakak", "adik", "tante",
    "kumis", "alis", "pipi", "dagu", "hidung", "leher", "tangan", "kaki",
    "perut", "dada", "pundak", "jari",
]

VERB_ROOTS = [
    "makan", "minum", "jalan", "lihat", "tonton", "dengar", "bilang",
    "omong", "pikir", "rasa", "tahu", "kenal", "ikut", "ajak", "buat",
    "bikin", "pakai", "punya", "kasih", "terima", "tolong", "bantu",
    "ubah", "ganti", "hapus", "blokir", "lapor", "unggah", "edit",
    "tiru", "niru", "jiplak", "hapal", "latih", "coba", "main", "kerja",
    "belajar", "ajar", "tulis", "baca", "datang", "pulang", "tidur",
    "bangun", "mandi", "diet", "operasi", "tambah",
]

MISC_ROOTS = [
    "orang", "banget", "benar", "tidak", "jangan", "memang", "kali",
    "hari", "tahun", "dunia", "negeri", "kampung", "kota", "rumah",
    "sekolah", "pasar", "harga", "uang", "hati", "jiwa", "mimpi",
    "harapan", "masalah", "urusan", "cerita", "kabar", "berita", "ada",
    "jadi", "asli", "nyata", "penting", "besar", "kecil", "panjang",
    "pendek", "tinggi", "rendah", "baru", "lama", "muda", "tua",
]

ALL_ROOTS = sorted(
    set(POSITIVE_ROOTS + NEGATIVE_ROOTS + TOPIC_ROOTS + VERB_ROOTS + MISC_ROOTS)
)

# slang -> standard form (single hop, no chains; keys never equal values;
# no key is a root; values are roots or stopwords)
NORMALIZATION = {
    "yg": "yang",
    "dgn": "dengan",
    "dg": "dengan",
    "utk": "untuk",
    "org": "orang",
    "orng": "orang",
    "tdk": "tidak",
    "gak": "tidak",
    "ngga": "tidak",
    "nggak": "tidak",
    "engga": "tidak",
    "gk": "tidak",
    "bgt": "banget",
    "bngt": "banget",
    "bgtt": "banget",
    "krn": "karena",
    "karna": "karena",
    "jd": "jadi",
    "jgn": "jangan",
    "jngn": "jangan",
    "dr": "dari",
    "dlm": "dalam",
    "sm": "sama",
    "udah": "sudah",
    "udh": "sudah",
    "dah": "sudah",
    "blm": "belum",
    "blum": "belum",
    "lg": "lagi",
    "lgi": "lagi",
    "skrg": "sekarang",
    "skrng": "sekarang",
    "gw": "saya",
    "gue": "saya",
    "gua": "saya",
    "ane": "saya",
    "lo": "kamu",
    "lu": "kamu",
    "elu": "kamu",
    "bner": "benar",
    "bnr": "benar",
    "emg": "memang",
    "emang": "memang",
    "tp": "tapi",
    "tpi": "tapi",
    "sdh": "sudah",
    "hrs": "harus",
    "bs": "bisa",
    "bsa": "bisa",
    "anjir": "anjing",
    "njir": "anjing",
    "anjr": "anjing",
    "bgst": "bangsat",
    "bgsd": "bangsat",
    "cntik": "cantik",
    "cntk": "cantik",
    "cakp": "cakep",
    "jlek": "jelek",
    "jlk": "jelek",
    "gndut": "gendut",
    "gendud": "gendut",
    "bgus": "bagus",
    "kerja2": "kerja",
    "bgt2": "banget",
    "gmn": "bagaimana",
    "gimana": "bagaimana",
    "knp": "kenapa",
    "napa": "kenapa",
    "sy": "saya",
    "km": "kamu",
    "trs": "terus",
    "trus": "terus",
    "sll": "selalu",
    "slalu": "selalu",
    "smoga": "semoga",
    "smg": "semoga",
    "mksh": "terimakasih",
    "makasih": "terimakasih",
    "thx": "terimakasih",
    "plis": "tolong",
    "pls": "tolong",
}

# word -> synonyms, keyed on post-preprocessing forms
THESAURUS = {
    "aneh": ["heran", "ganjil", "ajaib"],
    "foto": ["cetakan", "potret", "gambar"],
    "bagus": ["apik", "elok", "mantap"],
    "cantik": ["ayu", "jelita", "rupawan", "molek"],
    "keren": ["gaya", "necis"],
    "jelek": ["buruk", "butut"],
    "buruk": ["jelek", "busuk"],
    "bodoh": ["tolol", "dungu", "bebal"],
    "tolol": ["bodoh", "dungu"],
    "goblok": ["bodoh", "tolol"],
    "gendut": ["gemuk", "tambun", "buncit"],
    "kurus": ["ceking", "kerempeng"],
    "muka": ["wajah", "paras", "tampang"],
    "wajah": ["muka", "paras"],
    "senang": ["gembira", "riang", "suka"],
    "benci": ["muak", "sebal"],
    "marah": ["kesal", "murka", "berang"],
    "indah": ["elok", "permai", "asri"],
    "hebat": ["dahsyat", "luar", "jempolan"],
    "pintar": ["pandai", "cerdas", "cakap"],
    "malas": ["lamban", "lelet"],
    "rajin": ["tekun", "giat"],
    "sampah": ["kotoran", "limbah"],
    "palsu": ["tiruan", "gadungan", "imitasi"],
    "sombong": ["angkuh", "congkak", "pongah"],
    "jijik": ["mual", "muak"],
    "kotor": ["jorok", "dekil", "kumal"],
    "besar": ["raya", "akbar", "agung"],
    "kecil": ["mungil", "mini"],
    "baru": ["anyar", "gres"],
    "lama": ["usang", "lawas"],
    "lucu": ["jenaka", "kocak", "konyol"],
    "gagal": ["kandas", "gatot"],
    "sukses": ["berhasil", "jaya"],
    "uang": ["duit", "fulus"],
    "rumah": ["hunian", "kediaman"],
    "jalan": ["rute", "lintasan"],
    "lihat": ["pandang", "tatap", "tengok"],
    "bilang": ["ucap", "tutur", "sebut"],
    "makan": ["santap", "lahap"],
    "badan": ["tubuh", "raga", "awak"],
    "rambut": ["surai"],
    "teman": ["kawan", "sahabat", "sobat"],
    "cinta": ["asmara", "kasih"],
    "sayang": ["kasih", "cinta"],
    "kuat": ["tangguh", "perkasa"],
    "sehat": ["bugar", "segar"],
    "asli": ["tulen", "murni", "otentik"],
    "benar": ["betul", "tepat"],
    "cerita": ["kisah", "hikayat"],
    "kabar": ["berita", "warta"],
    "mimpi": ["impian", "angan"],
    "norak": ["kampungan", "katrok", "udik"],
    "manis": ["legit", "elok"],
    "suara": ["vokal", "bunyi"],
    "artis": ["seniman", "selebritas"],
    "bau": ["anyir", "apek"],
    "parah": ["akut", "kronis"],
    "rusak": ["hancur", "remuk"],
    "hancur": ["remuk", "luluh"],
    "tiru": ["jiplak", "salin"],
    "kerja": ["karya", "tugas"],
}

# base function words for the stopword list; expanded with clitics by the
# generator until the documented count is reached
STOPWORD_BASES = [
    "yang", "untuk", "pada", "dengan", "tanpa", "dalam", "atas", "bawah",
    "antara", "kepada", "dari", "oleh", "karena", "sebab", "agar",
    "supaya", "namun", "tetapi", "tapi", "atau", "dan", "serta", "lalu",
    "kemudian", "setelah", "sebelum", "sejak", "hingga", "sampai",
    "ketika", "saat", "waktu", "bila", "jika", "kalau", "apabila",
    "meski", "meskipun", "walau", "walaupun", "bahwa", "yakni", "yaitu",
    "ialah", "adalah", "itu", "ini", "sini", "situ", "sana", "mana",
    "siapa", "apa", "kapan", "mengapa", "kenapa", "bagaimana", "berapa",
    "saya", "kamu", "kami", "kita", "mereka", "beliau", "anda", "kalian",
    "aku", "engkau", "kau", "nya", "ku", "mu", "para", "sang", "si",
    "sebuah", "suatu", "seorang", "seekor", "beberapa", "semua", "segala",
    "seluruh", "setiap", "tiap", "masing", "sendiri", "lain", "lainnya",
    "sama", "juga", "pun", "pula", "lagi", "masih", "sudah", "telah",
    "sedang", "tengah", "akan", "bakal", "sempat", "pernah", "belum",
    "baru", "hanya", "cuma", "sekadar", "bahkan", "malah", "justru",
    "memang", "tentu", "pasti", "mungkin", "barangkali", "kiranya",
    "rupanya", "agaknya", "sepertinya", "seolah", "seakan", "seperti",
    "bagai", "bagaikan", "laksana", "ibarat", "yaknilah", "adapun",
    "sedangkan", "sementara", "padahal", "kendati", "biarpun", "sungguhpun",
    "sekalipun", "sebagaimana", "sehingga", "makanya", "karenanya",
    "olehnya", "harus", "mesti", "wajib", "perlu", "boleh", "bisa",
    "dapat", "mampu", "sanggup", "mau", "ingin", "hendak", "kepingin",
    "terhadap", "mengenai", "tentang", "perihal", "seputar", "selaku",
    "sebagai", "secara", "selama", "sepanjang", "seusai", "selepas",
    "menjelang", "menurut", "berdasarkan", "melalui", "lewat", "via",
    "demi", "guna", "buat", "bagi", "akan", "ke", "di", "se", "amat",
    "sangat", "terlalu", "cukup", "agak", "sedikit", "banyak", "lebih",
    "paling", "kurang", "hampir", "nyaris", "kira", "sekitar", "tepat",
    "persis", "langsung", "segera", "lekas", "cepat", "pelan", "perlahan",
    "begitu", "begini", "demikian", "sedemikian", "sekian", "pertama",
    "kedua", "ketiga", "terakhir", "akhirnya", "awalnya", "mulanya",
    "selanjutnya", "berikutnya", "sebelumnya", "sesudahnya", "kini",
    "sekarang", "nanti", "besok", "kemarin", "tadi", "dulu", "dahulu",
    "kelak", "senantiasa", "selalu", "sering", "kerap", "jarang",
    "kadang", "sesekali", "terus", "tetap", "sempurna", "sungguh",
    "nian", "benarlah", "tidaklah", "bukan", "bukannya", "tanpanya",
    "dimana", "kemana", "darimana", "terhadapnya", "olehkarenanya",
    "sebabnya", "akibatnya", "hasilnya", "intinya", "pokoknya",
    "dasarnya", "umumnya", "biasanya", "lazimnya", "normalnya",
    "harusnya", "mestinya", "seharusnya", "semestinya", "sebaiknya",
    "setidaknya", "sekurangnya", "selebihnya", "sisanya", "antaranya",
    "diantaranya", "misalnya", "contohnya", "umpamanya", "seumpama",
    "andai", "andaikan", "seandainya", "semisal", "ssttt", "dong", "deh",
    "sih", "kok", "toh", "kan", "nah", "loh", "lho", "yuk", "ayo",
    "mari", "silakan", "tolonglah", "mohon", "harap",
]
